#pragma once

// Polynomial remainder sequences over an integral domain.
//
// Everything here is fraction-free: pseudo-remainders followed by the
// subresultant exact divisions, so coefficients stay in the ring (Z, or Q[k]
// for the parametric resultant) and grow only polynomially.

#include "hawaii/poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hawaii {

template <class R>
struct RingOps;

template <>
struct RingOps<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <>
struct RingOps<Poly> {
  static Poly zero() { return {}; }
  static Poly one() { return Poly::constant(1); }
  static bool is_zero(const Poly& a) { return a.is_zero(); }
  static Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("inexact division in Q[k] subresultant step");
    return q;
  }
};

/// Dense polynomial with coefficients in R, lowest degree first, trimmed.
template <class R>
using Dense = std::vector<R>;

namespace prs_detail {

template <class R>
void trim(Dense<R>& a) {
  while (!a.empty() && RingOps<R>::is_zero(a.back())) a.pop_back();
}

template <class R>
int degree(const Dense<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
R power(R base, unsigned e) {
  R result = RingOps<R>::one();
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b
template <class R>
Dense<R> pseudo_remainder(Dense<R> a, const Dense<R>& b) {
  const int db = degree(b);
  int e = degree(a) - db + 1;
  if (e <= 0) return a;
  const R& lb = b.back();
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    R la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(j + shift)] = a[static_cast<std::size_t>(j + shift)] - la * b[static_cast<std::size_t>(j)];
    }
    trim(a);
    --e;
  }
  if (e > 0) {
    R f = power(lb, static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

}  // namespace prs_detail

/// Subresultant polynomial remainder sequence [a, b, S_2, ..., S_k] where
/// S_k is the last nonzero member. Requires deg a >= deg b, b nonzero.
template <class R>
std::vector<Dense<R>> subresultant_prs(Dense<R> a, Dense<R> b) {
  using namespace prs_detail;
  using Ops = RingOps<R>;
  trim(a);
  trim(b);
  if (b.empty()) throw std::invalid_argument("subresultant_prs: second argument is zero");
  if (degree(a) < degree(b)) std::swap(a, b);
  std::vector<Dense<R>> seq{a, b};
  R g = Ops::one();
  R h = Ops::one();
  while (true) {
    const Dense<R>& A = seq[seq.size() - 2];
    const Dense<R>& B = seq.back();
    if (degree(B) <= 0) break;
    const int delta = degree(A) - degree(B);
    Dense<R> rem = pseudo_remainder(A, B);
    if (rem.empty()) break;
    R divisor = g * power(h, static_cast<unsigned>(delta));
    for (auto& c : rem) c = Ops::exact_div(c, divisor);
    g = B.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = Ops::exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    }
    seq.push_back(std::move(rem));
  }
  return seq;
}

/// Resultant with the Sylvester-determinant convention:
/// Res(a, b) = lc(a)^deg(b) * prod over roots alpha of a of b(alpha).
template <class R>
R subresultant_resultant(Dense<R> a, Dense<R> b) {
  using namespace prs_detail;
  using Ops = RingOps<R>;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return Ops::zero();
  if (degree(a) == 0) return power(a.back(), static_cast<unsigned>(degree(b)));
  if (degree(b) == 0) return power(b.back(), static_cast<unsigned>(degree(a)));
  bool negate = false;
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if ((degree(a) % 2 == 1) && (degree(b) % 2 == 1)) negate = !negate;
  }
  R g = Ops::one();
  R h = Ops::one();
  while (true) {
    const int delta = degree(a) - degree(b);
    if ((degree(a) % 2 == 1) && (degree(b) % 2 == 1)) negate = !negate;
    Dense<R> rem = pseudo_remainder(a, b);
    a = std::move(b);
    if (rem.empty()) return Ops::zero();
    R divisor = g * power(h, static_cast<unsigned>(delta));
    for (auto& c : rem) c = Ops::exact_div(c, divisor);
    b = std::move(rem);
    g = a.back();
    if (delta != 0) {
      h = Ops::exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    }
    if (degree(b) <= 0) break;
  }
  const int da = degree(a);
  R result = Ops::exact_div(power(b.back(), static_cast<unsigned>(da)), power(h, static_cast<unsigned>(da - 1)));
  return negate ? R(Ops::zero() - result) : result;
}

/// Integer coefficients of the primitive associate of p (positive leading coefficient).
Dense<Integer> to_integer_primitive(const Poly& p);
Poly from_integer(const Dense<Integer>& p);

/// Monic gcd over Q, computed on primitive integer associates with the
/// subresultant PRS. Throws std::invalid_argument if both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

struct SquarefreeFactor {
  Poly factor;  // monic, square-free
  int multiplicity;
};

struct SquarefreeDecomposition {
  Rational leading;  // p = leading * prod factor_i^multiplicity_i
  std::vector<SquarefreeFactor> factors;
};

/// Yun's algorithm. Factors are monic, pairwise coprime, listed by increasing
/// multiplicity; constant factors are omitted. Throws for the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(const Poly& p);

/// Sylvester-convention resultant over Q.
Rational resultant(const Poly& a, const Poly& b);

/// Res_x(H_k[p], dH_k[p]/dx) as a polynomial in k, where
/// H_k[p] = k (p')^2 - p p''.
Poly resultant_in_kappa(const Poly& p);

/// Resultant in x of two polynomials whose coefficients are polynomials in a
/// parameter; the result is a polynomial in that parameter.
Poly parametric_resultant(const Dense<Poly>& a, const Dense<Poly>& b);

/// x-derivative of a polynomial with parametric coefficients.
Dense<Poly> parametric_derivative(const Dense<Poly>& a);

}  // namespace hawaii
