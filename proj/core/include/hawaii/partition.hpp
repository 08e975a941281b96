#pragma once

// The poles of M[p] (real zeros of p' that are not zeros of p) split the real
// line into intervals I_1 < ... < I_m. An interval is of the first type when
// it contains a root of p, otherwise of the second type. Each finite end of an
// interval is a right or a wrong point according to the sign of the local
// expansion of p p^(s) around the pole.

#include "hawaii/hkappa.hpp"
#include "hawaii/realroots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hawaii {

enum class IntervalKind { first, second };
enum class EndTag { right, wrong, none };

std::string to_string(IntervalKind kind);
std::string to_string(EndTag tag);

struct PartitionInterval {
  std::optional<AlgebraicNumber> left;   // nullopt: -inf
  std::optional<AlgebraicNumber> right;  // nullopt: +inf
  IntervalKind kind = IntervalKind::second;
  EndTag left_end = EndTag::none;
  EndTag right_end = EndTag::none;
  int roots_of_p = 0;  // distinct roots of p inside

  bool is_infinite() const { return !left || !right; }
};

/// Tags of a pole as seen from each side.
struct PoleTags {
  int s = 2;         // 1 + multiplicity of the pole as a root of p'
  int sigma = 0;     // sign p(xi) * sign p^(s)(xi)
  EndTag left_side;  // tag of xi as the right end of the interval on its left
  EndTag right_side; // tag of xi as the left end of the interval on its right
};

struct IntervalPartition {
  int degree = 0;
  RootList poles;
  std::vector<PoleTags> pole_tags;
  std::vector<PartitionInterval> intervals;
};

/// Throws std::invalid_argument for deg p < 2.
IntervalPartition interval_partition(const Poly& p);

struct IntervalCount {
  std::size_t index = 0;  // 0-based position in the partition
  int count_h = 0;
  int count_q = 0;
};

struct CountReport {
  Rational kappa;
  int n = 0;
  int z_r_p = 0;
  int z_c_p = 0;
  int z_r_h = 0;
  int z_r_q = 0;
  HQPair hq;
  IntervalPartition partition;
  std::vector<IntervalCount> per_interval;
  int at_poles_h = 0;  // zeros of H located exactly at poles
  int at_poles_q = 0;
  bool degenerate_h = false;
  bool consistent = true;  // per-interval sums plus pole counts reproduce the totals
};

/// Whole-line and per-interval zero counts of H_k[p] and of the reduced
/// numerator of Q_k[p]. A degenerate H yields a report with degenerate_h set
/// and no counts for H or Q.
CountReport per_interval_counts(const Poly& p, const Rational& kappa);
CountReport per_interval_counts(const Poly& p, const Rational& kappa, const IntervalPartition& partition);

/// Whole-line counts only.
struct WholeLineCounts {
  int z_r_h = 0;
  int z_r_q = 0;
  bool degenerate_h = false;
};
WholeLineCounts whole_line_counts(const Poly& p, const Rational& kappa);

}  // namespace hawaii
