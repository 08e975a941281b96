#pragma once

#include "hawaii/rational.hpp"

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hawaii {

/// Dense univariate polynomial over Q, lowest degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector and reports degree -1.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// x
  static Poly x();
  /// leading * prod (x - r_i)
  static Poly from_roots(std::span<const Rational> roots, const Rational& leading = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero for i beyond the degree.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly derivative(int order = 1) const;
  /// Antiderivative with the given constant term.
  Poly integral(const Rational& constant = 0) const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;
  ComplexRational eval(const ComplexRational& z) const;

  /// q(x) = p(x + t)
  Poly taylor_shift(const Rational& t) const;
  /// q(x) = p(c * x)
  Poly scale_argument(const Rational& c) const;
  /// p(q(x))
  Poly compose(const Poly& inner) const;

  Poly monic() const;
  /// Divides out leading coefficient sign and integer content so the result
  /// has coprime integer coefficients and positive leading coefficient.
  Poly primitive() const;
  /// lcm of denominators times content inverse, so primitive() = p * factor.
  Rational primitive_factor() const;

  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned e) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Ring arithmetic selected at run time (used by the CLI).
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Coefficient b of (x + a/n)^{n-2} when the monic normalisation of p is
/// expanded about the mean of its roots, -a/n. Throws for degree < 2.
Rational depressed_b(const Poly& p);

}  // namespace hawaii
