#include "hawaii/rational.hpp"

#include <optional>

#include <cctype>
#include <stdexcept>

namespace hawaii {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = strip_sign(text, negative);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view body = strip_sign(text, negative);
  auto dot = body.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = body.substr(dot + 1);
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
      (whole.empty() && frac.empty())) {
    throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  }
  std::string digits = std::string(whole) + std::string(frac);
  Integer n(digits.empty() ? std::string("0") : digits, 10);
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_pow(const Rational& base, unsigned exponent) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo; a missing hi means +inf.
Rational simplest_nonnegative(const Rational& lo, const std::optional<Rational>& hi) {
  const Integer fl = floor(lo);
  if (!hi || fl + 1 < *hi) return Rational(fl + 1);
  std::optional<Rational> upper;
  if (lo != fl) upper = 1 / (lo - fl);
  const Rational y = simplest_nonnegative(1 / (*hi - fl), upper);
  return fl + 1 / y;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between requires lo < hi");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_nonnegative(-hi, Rational(-lo));
  return simplest_nonnegative(lo, hi);
}

}  // namespace hawaii
