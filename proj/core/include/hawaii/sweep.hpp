#pragma once

// Zero counts of H_k[p] and Q_k[p] as functions of k.
//
// Both counts are step functions of k. They can only change where the
// reduced numerator k*a - b (see KappaPencil) acquires a multiple real root or
// drops in degree, so the breakpoints are the real roots of
// Res_x(k*a - b, d/dx (k*a - b)) together with the root of its leading
// coefficient, which is k = (n-1)/n.

#include "hawaii/partition.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hawaii {

/// Raised when the breakpoint polynomial vanishes identically
/// (p = c (x - a)^m, where H_k is a constant multiple of a fixed polynomial).
class BreakpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepPoint {
  Rational kappa;
  Rational evaluated_at;  // differs from kappa only when a breakpoint was dodged
  WholeLineCounts counts;
  bool breakpoint = false;
  bool degree_drop = false;  // k = (n-1)/n
};

/// Exact counts at lo, lo + step, ..., up to hi. With dodge set, grid points
/// lying on a breakpoint are evaluated at k + step/997 instead.
std::vector<SweepPoint> kappa_sweep_grid(const Poly& p, const Rational& lo, const Rational& hi, const Rational& step,
                                         bool dodge = false);

/// Polynomial in k whose real roots contain every breakpoint. Throws
/// BreakpointError when it is identically zero.
Poly breakpoint_polynomial(const Poly& p);

struct KappaGap {
  std::optional<AlgebraicNumber> lo;  // nullopt: -inf
  std::optional<AlgebraicNumber> hi;  // nullopt: +inf
  Rational sample;
  WholeLineCounts counts;
};

struct KappaBreakpoints {
  std::vector<AlgebraicNumber> points;
  std::vector<std::optional<WholeLineCounts>> at_points;  // filled for rational breakpoints
  std::vector<KappaGap> gaps;                             // points.size() + 1 entries

  /// Gap containing k, or nullptr when k is a breakpoint.
  const KappaGap* gap_containing(const Rational& kappa) const;
};

KappaBreakpoints kappa_breakpoints_exact(const Poly& p);

/// A rational strictly between two distinct algebraic numbers a < b.
Rational rational_between(AlgebraicNumber a, AlgebraicNumber b);

enum class InfiniteSide { left, right };

struct ThresholdEnclosure {
  Rational lo;  // no zero of Q_lo in the interval
  Rational hi;  // Q_hi has a zero in the interval
};

/// Encloses C = min of M[p] over the infinite interval on the given side by
/// bisection in k, starting from [1/2, (n-1)/n]. Throws std::invalid_argument
/// if that interval is of the first type or p' has no real root, and
/// std::runtime_error if the starting bracket does not separate.
ThresholdEnclosure infinite_interval_threshold(const Poly& p, const Rational& width, InfiniteSide side);

}  // namespace hawaii
