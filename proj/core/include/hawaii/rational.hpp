#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hawaii {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

/// Parses `n` or `n/d` (optional sign, decimal digits). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Plain decimal literal read exactly: `0.1` -> 1/10, `-2.75` -> -11/4.
Rational parse_decimal(std::string_view text);

/// `n` when the denominator is 1, otherwise `n/d`.
std::string to_string(const Rational& r);

/// Approximate value for human-readable output only.
double to_double(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exponent);

/// Largest integer not exceeding r.
Integer floor(const Rational& r);

/// The rational with the smallest denominator in the open interval (lo, hi),
/// ties broken toward zero. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Dyadic midpoint helper used by bisection code.
inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  m /= 2;
  return m;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Exact complex number with rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  ComplexRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace hawaii
