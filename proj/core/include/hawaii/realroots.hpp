#pragma once

// Real root counting and isolation over Q.
//
// Sturm chains are built on square-free factors; multiplicities come from the
// square-free decomposition. Isolating intervals are open, have rational (dyadic) end
// points and never have a root of the defining polynomial on their boundary.

#include "hawaii/poly.hpp"
#include "hawaii/prs.hpp"

#include <optional>
#include <vector>

namespace hawaii {

/// Interval with rational or infinite end points. nullopt means -inf for `lo`
/// and +inf for `hi`; infinite ends are always open.
struct IntervalSpec {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static IntervalSpec real_line() { return {}; }
  static IntervalSpec open(std::optional<Rational> a, std::optional<Rational> b) {
    return {std::move(a), std::move(b), false, false};
  }
  static IntervalSpec closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }

  bool contains(const Rational& x) const;
};

/// Sturm sequence of a square-free polynomial stored as primitive integer
/// polynomials (every member is a positive multiple of the classical one).
class SturmChain {
 public:
  explicit SturmChain(const Poly& squarefree);

  /// Sign variations at x, zeros skipped.
  int variations_at(const Rational& x) const;
  /// side < 0: at -inf, side > 0: at +inf.
  int variations_at_infinity(int side) const;
  /// Number of roots in (lo, hi]; nullopt ends are infinite.
  int count_half_open(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  std::vector<Poly> polys() const;
  std::size_t size() const { return chain_.size(); }

 private:
  std::vector<Dense<Integer>> chain_;
};

/// Sturm sequence of the square-free part of p, as rational polynomials.
std::vector<Poly> sturm_chain(const Poly& p);

/// Sign of a polynomial with integer coefficients at a rational point.
int sign_at_rational(const Dense<Integer>& p, const Rational& x);

/// A real algebraic number: the unique root of `defining` inside the open
/// interval (lo, hi). When lo == hi the number is the rational lo and
/// `defining` is x - lo.
struct AlgebraicNumber {
  Poly defining;  // monic, square-free
  Rational lo;
  Rational hi;
  int multiplicity = 1;  // multiplicity as a root of the polynomial it came from

  static AlgebraicNumber exact(const Rational& value, int multiplicity = 1);

  bool is_exact() const { return lo == hi; }
  /// Midpoint of the isolating interval (the value itself when exact).
  Rational approx() const { return midpoint(lo, hi); }
  Rational width() const { return hi - lo; }
};

using RootList = std::vector<AlgebraicNumber>;

/// Distinct real roots with multiplicities, ascending.
RootList isolate_roots(const Poly& p);

/// Narrows the isolating interval below `width` by bisection; collapses to an
/// exact representation if a bisection point hits the root.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Returns the exact representation when the simplest rational inside the
/// isolating interval is the root, otherwise a unchanged.
AlgebraicNumber snap_rational(const AlgebraicNumber& a);

/// Refines to the given width and then tries snap_rational.
AlgebraicNumber refine_and_snap(const AlgebraicNumber& a, const Rational& width);

/// One bisection step.
AlgebraicNumber bisect(const AlgebraicNumber& a);

/// Sign of q at the algebraic number a.
int sign_at(const Poly& q, const AlgebraicNumber& a);

/// -1, 0, +1 as a < b, a == b, a > b.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
int compare(const AlgebraicNumber& a, const Rational& b);

/// Counts real roots of a fixed polynomial on many intervals. Holds the
/// square-free decomposition and one Sturm chain per factor.
class RootCounter {
 public:
  explicit RootCounter(const Poly& p);

  const Poly& poly() const { return poly_; }

  int count(const IntervalSpec& iv, bool with_multiplicity = true) const;
  /// Open interval between two (possibly infinite) algebraic end points.
  int count_between(const std::optional<AlgebraicNumber>& lo, const std::optional<AlgebraicNumber>& hi,
                    bool with_multiplicity = true) const;
  /// Multiplicity of a as a root of the counted polynomial (0 if not a root).
  int multiplicity_at(const AlgebraicNumber& a) const;
  int total(bool with_multiplicity = true) const { return count(IntervalSpec::real_line(), with_multiplicity); }

 private:
  struct Part {
    Poly factor;
    int multiplicity;
    SturmChain chain;
  };

  int count_open(const std::optional<Rational>& lo, const std::optional<Rational>& hi, bool with_multiplicity) const;
  /// Refines a until no factor has a root in its isolating interval other
  /// than a itself and no factor vanishes at either end.
  AlgebraicNumber separate(AlgebraicNumber a) const;

  Poly poly_;
  std::vector<Part> parts_;
};

/// Number of distinct real roots of p in iv. Throws for the zero polynomial.
int count_distinct_roots(const Poly& p, const IntervalSpec& iv = IntervalSpec::real_line());
/// Number of real roots of p in iv counted with multiplicity.
int count_roots_with_multiplicity(const Poly& p, const IntervalSpec& iv = IntervalSpec::real_line());

/// Smallest power of two strictly above every |root| of p.
Rational cauchy_bound(const Poly& p);

}  // namespace hawaii
