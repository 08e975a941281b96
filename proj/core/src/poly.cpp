#include "hawaii/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hawaii {
namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::x() { return Poly({0, 1}); }

Poly Poly::from_roots(std::span<const Rational> roots, const Rational& leading) {
  if (leading == 0) throw std::invalid_argument("from_roots: leading coefficient must be nonzero");
  std::vector<Rational> c{leading};
  for (const Rational& r : roots) {
    // multiply by (x - r) in place
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) {
      c[i] = c[i - 1] - r * c[i];
    }
    c[0] = -r * c[0];
  }
  return Poly(std::move(c));
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (is_zero()) return zero_rational();
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (order == 0) return *this;
  if (order > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < out.size(); ++i) {
    // falling factorial (i+order)!/i!
    Integer f = 1;
    for (int j = 1; j <= order; ++j) f *= static_cast<unsigned long>(i + static_cast<std::size_t>(j));
    out[i] = coeffs_[i + static_cast<std::size_t>(order)] * f;
  }
  return Poly(std::move(out));
}

Poly Poly::integral(const Rational& constant) const {
  std::vector<Rational> out(coeffs_.size() + 1);
  out[0] = constant;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<unsigned long>(i + 1));
  }
  return Poly(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ComplexRational Poly::eval(const ComplexRational& z) const {
  ComplexRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

Poly Poly::taylor_shift(const Rational& t) const {
  // Horner in the shifted basis: repeated synthetic division by (x - t).
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  if (t == 0 || n <= 1) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      c[j - 1] += t * c[j];
    }
  }
  return Poly(std::move(c));
}

Poly Poly::scale_argument(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational power = 1;
  for (auto& coeff : out) {
    coeff *= power;
    power *= c;
  }
  return Poly(std::move(out));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + Poly::constant(*it);
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Rational Poly::primitive_factor() const {
  if (is_zero()) return 1;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, content);
  factor.canonicalize();
  if (leading() < 0) factor = -factor;
  return factor;
}

Poly Poly::primitive() const { return *this * primitive_factor(); }

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly{}, *this};
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational inv_lc = 1 / divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] * inv_lc;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

Rational depressed_b(const Poly& p) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("depressed_b requires degree >= 2");
  Poly monic = p.monic();
  // x^n + a x^{n-1} + ...  expanded about -a/n: shift by -a/n.
  Rational shift = -monic.coeff(n - 1) / Rational(n);
  Poly depressed = monic.taylor_shift(shift);
  return depressed.coeff(n - 2);
}

}  // namespace hawaii
