#include "hawaii/hkappa.hpp"

#include "hawaii/prs.hpp"

namespace hawaii {

Poly h_kappa(const Poly& p, const Rational& kappa) {
  if (p.degree() < 2) throw std::invalid_argument("H_k[p] requires deg p >= 2");
  Poly d1 = p.derivative();
  return kappa * (d1 * d1) - p * p.derivative(2);
}

bool h_is_degenerate(const Poly& p, const Rational& kappa) { return h_kappa(p, kappa).is_zero(); }

HQPair q_reduced(const Poly& p, const Rational& kappa) {
  HQPair out;
  out.h = h_kappa(p, kappa);
  Poly d1 = p.derivative();
  Poly den = d1 * d1;
  if (out.h.is_zero()) {
    out.degenerate = true;
    out.q_den = den.monic();
    return out;
  }
  Poly g = gcd(out.h, den);
  out.q_num = out.h / g;
  out.q_den = den / g;
  // put the constant into the numerator so the denominator is monic
  Rational lc = out.q_den.leading();
  out.q_den = out.q_den * (1 / lc);
  out.q_num = out.q_num * (1 / lc);
  return out;
}

KappaPencil kappa_pencil(const Poly& p) {
  if (p.degree() < 2) throw std::invalid_argument("H_k[p] requires deg p >= 2");
  Poly d1 = p.derivative();
  Poly sq = d1 * d1;
  Poly pp2 = p * p.derivative(2);
  KappaPencil out;
  out.common = pp2.is_zero() ? sq.monic() : gcd(sq, pp2);
  out.a = sq / out.common;
  out.b = pp2 / out.common;
  return out;
}

Rational m_eval(const Poly& p, const Rational& x) {
  Poly d1 = p.derivative();
  Rational slope = d1(x);
  if (slope != 0) return p(x) * p.derivative(2)(x) / (slope * slope);
  if (p(x) != 0) throw PoleError("M[p] has a pole at " + to_string(x));
  // multiple root: find its multiplicity j and return (j-1)/j
  int j = 0;
  Poly q = p;
  while (q(x) == 0) {
    q = q.derivative();
    ++j;
  }
  return Rational(j - 1, j);
}

MLimitInfo m_limit_info(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("m_limit_info requires deg p >= 1");
  MLimitInfo info;
  info.at_infinity = Rational(n - 1, n);
  for (const auto& root : isolate_roots(p)) {
    if (root.multiplicity >= 2) {
      info.at_multiple_roots.emplace_back(root, Rational(root.multiplicity - 1, root.multiplicity));
    }
  }
  return info;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Poly jensen_pk(const Poly& p, int k) {
  if (k < 0 || k > p.degree()) throw std::out_of_range("jensen_pk: k must lie in [0, deg p]");
  const int top = 2 * k;
  std::vector<Poly> derivs;
  derivs.reserve(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) derivs.push_back(p.derivative(j));
  Poly sum;
  for (int j = 0; j <= top; ++j) {
    Rational c(binomial(static_cast<unsigned>(top), static_cast<unsigned>(j)));
    if (j % 2 == 1) c = -c;
    sum += c * (derivs[static_cast<std::size_t>(j)] * derivs[static_cast<std::size_t>(top - j)]);
  }
  return k % 2 == 1 ? -sum : sum;
}

Poly polya_gk(const Poly& p, int k) {
  const int n = p.degree();
  if (k < 1 || k > n - 1) throw std::out_of_range("polya_gk: k must lie in [1, deg p - 1]");
  Poly dk = p.derivative(k);
  return Rational(n - k) * (dk * dk) - Rational(n - k + 1) * (p.derivative(k - 1) * p.derivative(k + 1));
}

Poly polya_gk_via_h(const Poly& p, int k) {
  const int n = p.degree();
  if (k < 1 || k > n - 1) throw std::out_of_range("polya_gk_via_h: k must lie in [1, deg p - 1]");
  return Rational(n - k + 1) * h_kappa(p.derivative(k - 1), Rational(n - k, n - k + 1));
}

}  // namespace hawaii
