#pragma once

// H_k[p] = k (p')^2 - p p'', the rational function Q_k = H_k / (p')^2,
// M[p] = p p'' / (p')^2, and the Jensen and Polya polynomials.

#include "hawaii/poly.hpp"
#include "hawaii/realroots.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hawaii {

/// Thrown when M[p] is evaluated at a zero of p' that is not a root of p.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// k (p')^2 - p p''. Throws std::invalid_argument for degree < 2.
Poly h_kappa(const Poly& p, const Rational& kappa);

/// True when H_k[p] vanishes identically (p = c (x - a)^m with k = (m-1)/m).
bool h_is_degenerate(const Poly& p, const Rational& kappa);

struct HQPair {
  Poly h;
  Poly q_num;  // zero when degenerate
  Poly q_den;  // monic
  bool degenerate = false;
};

/// H_k and H_k / (p')^2 in lowest terms.
HQPair q_reduced(const Poly& p, const Rational& kappa);

/// The k-independent factorisation H_k = common * (k * a - b) with
/// common = gcd((p')^2, p p''), a = (p')^2 / common, b = p p'' / common.
/// gcd(a, b) = 1, so the reduced numerator of Q_k is (k * a - b) up to a
/// constant for every k.
struct KappaPencil {
  Poly common;
  Poly a;
  Poly b;

  Poly at(const Rational& kappa) const { return kappa * a - b; }
};

KappaPencil kappa_pencil(const Poly& p);

/// p(x) p''(x) / p'(x)^2. At a multiple root of p of multiplicity j returns
/// the limit (j-1)/j; throws PoleError at any other zero of p'.
Rational m_eval(const Poly& p, const Rational& x);

struct MLimitInfo {
  Rational at_infinity;                                          // (n-1)/n
  std::vector<std::pair<AlgebraicNumber, Rational>> at_multiple_roots;  // (root, (j-1)/j)
};

MLimitInfo m_limit_info(const Poly& p);

/// Jensen polynomial P_k = (-1)^k sum_{j=0}^{2k} (-1)^j C(2k, j) p^(j) p^(2k-j),
/// so that sum_k P_k(x) y^(2k) / (2k)! = |p(x + iy)|^2. Requires 0 <= k <= deg p.
Poly jensen_pk(const Poly& p, int k);

/// Polya polynomial G_k = (n-k) (p^(k))^2 - (n-k+1) p^(k-1) p^(k+1) for
/// 1 <= k <= n-1.
Poly polya_gk(const Poly& p, int k);

/// (n-k+1) * H_{(n-k)/(n-k+1)}[p^(k-1)], which equals polya_gk(p, k).
Poly polya_gk_via_h(const Poly& p, int k);

/// Binomial coefficient as an exact integer.
Integer binomial(unsigned n, unsigned k);

/// Factorial as an exact integer.
Integer factorial(unsigned n);

}  // namespace hawaii
