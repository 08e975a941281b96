#include "hawaii/prs.hpp"

#include <algorithm>

namespace hawaii {

Dense<Integer> to_integer_primitive(const Poly& p) {
  Poly prim = p.primitive();
  Dense<Integer> out;
  out.reserve(prim.coeffs().size());
  for (const auto& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

Poly from_integer(const Dense<Integer>& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.emplace_back(c);
  return Poly(std::move(coeffs));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  auto seq = subresultant_prs(to_integer_primitive(a), to_integer_primitive(b));
  Poly last = from_integer(seq.back());
  if (last.degree() == 0) return Poly::constant(1);
  return last.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
  if (p.degree() <= 0) return Poly::constant(1);
  Poly g = gcd(p, p.derivative());
  return (p / g).monic();
}

SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = f / a;
  Poly c = df / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly factor = gcd(b, d);
    if (factor.degree() > 0) out.factors.push_back({factor, i});
    b = b / factor;
    c = d / factor;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant with a zero polynomial");
  // Res(fa*a, fb*b) = fa^deg b * fb^deg a * Res(a, b)
  Rational fa = a.primitive_factor();
  Rational fb = b.primitive_factor();
  Integer r = subresultant_resultant(to_integer_primitive(a), to_integer_primitive(b));
  Rational scale = rational_pow(fa, static_cast<unsigned>(b.degree())) * rational_pow(fb, static_cast<unsigned>(a.degree()));
  return Rational(r) / scale;
}

Dense<Poly> parametric_derivative(const Dense<Poly>& a) {
  Dense<Poly> out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<unsigned long>(i)));
  prs_detail::trim(out);
  return out;
}

Poly parametric_resultant(const Dense<Poly>& a, const Dense<Poly>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("parametric resultant with a zero polynomial");
  return subresultant_resultant(a, b);
}

Poly resultant_in_kappa(const Poly& p) {
  if (p.is_zero() || p.degree() < 2) throw std::invalid_argument("resultant_in_kappa requires degree >= 2");
  Poly d1 = p.derivative();
  Poly sq = d1 * d1;
  Poly pp2 = p * p.derivative(2);
  const int top = std::max(sq.degree(), pp2.degree());
  Dense<Poly> h(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) {
    // k * sq_j - pp2_j
    h[static_cast<std::size_t>(j)] = Poly({-pp2.coeff(j), sq.coeff(j)});
  }
  prs_detail::trim(h);
  return parametric_resultant(h, parametric_derivative(h));
}

}  // namespace hawaii
