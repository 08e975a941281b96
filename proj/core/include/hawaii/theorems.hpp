#pragma once

// Predicted zero counts for H_k[p] and Q_k[p] and verdicts comparing them with
// exact counts.
//
// Predictions are produced from Preconditions alone; the computed counts are
// only consulted by judge().

#include "hawaii/partition.hpp"
#include "hawaii/realroots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hawaii {

enum class Outcome { pass, fail, inapplicable, degenerate_range, boundary };

std::string to_string(Outcome outcome);

/// Which count a prediction constrains.
enum class Counted { h, q };

struct Prediction {
  Counted target = Counted::h;
  std::optional<int> lo;  // inclusive
  std::optional<int> hi;  // inclusive
  std::string text;

  bool admits(int value) const { return (!lo || value >= *lo) && (!hi || value <= *hi); }
};

struct TheoremVerdict {
  std::string id;
  Rational kappa;
  bool applicable = false;
  std::string reason;
  Prediction predicted;
  std::optional<int> computed;
  Outcome outcome = Outcome::inapplicable;
  std::vector<std::string> notes;
  bool assert_prediction = true;  // false for boundary and degenerate-range verdicts

  bool failed() const { return outcome == Outcome::fail; }
};

struct Preconditions {
  int degree = 0;
  int z_r_p = 0;             // real roots of p with multiplicity
  int distinct_real_p = 0;   // distinct real roots of p
  int distinct_real_dp = 0;  // distinct real roots of p'
  bool p_real_roots_simple = false;   // every real root of p is simple
  bool p_prime_real_simple = false;   // p' has deg p - 1 real simple roots
  bool p_real_rooted_simple = false;  // p has deg p real simple roots
  bool p_real_rooted = false;         // all roots of p real
  bool perfect_power = false;         // p = c (x - a)^n
};

/// Throws std::invalid_argument for deg p < 2.
Preconditions check_preconditions(const Poly& p);

/// Verdict ids, one per family of statements.
namespace verdict_id {
inline constexpr const char* critical_simple_equality = "large-kappa-equality";
inline constexpr const char* nonpositive_equality = "nonpositive-kappa-equality";
inline constexpr const char* small_kappa_sandwich = "small-kappa-sandwich";
inline constexpr const char* real_rooted_regime = "real-rooted-regime-sandwich";
inline constexpr const char* lower_bound_large = "lower-bound-large-kappa";
inline constexpr const char* lower_bound_middle = "lower-bound-middle-kappa";
inline constexpr const char* lower_bound_nonpositive = "lower-bound-nonpositive-kappa";
inline constexpr const char* laguerre = "laguerre";
inline constexpr const char* hawaii = "hawaii";
inline constexpr const char* rolle = "rolle-correspondence";
inline constexpr const char* interval_positivity = "interval-positivity";
inline constexpr const char* shapiro_criterion = "even-degree-criterion";
inline constexpr const char* parity = "interval-parity";
inline constexpr const char* first_type_nonpositive = "first-type-nonpositive-kappa";
inline constexpr const char* finite_interval_counts = "finite-interval-counts";
}  // namespace verdict_id

/// Predictions at k for every count statement whose hypotheses hold. Verdicts
/// whose hypotheses fail are returned with applicable = false.
std::vector<TheoremVerdict> predict(const Preconditions& pre, const Rational& kappa);

/// Fills computed and outcome from whole-line counts.
std::vector<TheoremVerdict> judge(std::vector<TheoremVerdict> predictions, const WholeLineCounts& counts);

/// predict + judge on exact counts of p at k. A degenerate H makes every
/// verdict inapplicable.
std::vector<TheoremVerdict> verify_counts(const Poly& p, const Rational& kappa);

/// Z_R(H_1) = 0 and H_1 > 0 at a sample point for real simple-rooted p.
TheoremVerdict check_laguerre(const Poly& p);

/// Z_R(H_1) <= Z_C(p) when the real roots of p are simple.
TheoremVerdict check_hawaii(const Poly& p);

/// c (p'')^2 - p' p''' with c = 2 - 1/k, without a degree restriction.
Poly h_of_derivative(const Poly& p, const Rational& kappa);

struct IdentityCheck {
  bool first = false;   // H' p' - G p = ((2k-1)/k) H p''
  bool second = false;  // H' p'' - k G p' = H p'''
};

/// Exact check of the two identities linking H_k[p] and G = H_{2-1/k}[p'].
/// Requires k != 0.
IdentityCheck check_identities(const Poly& p, const Rational& kappa);

/// Z_(a,b)(H_k[p]) <= Z_(a,b)(H_{2-1/k}[p']) + 1 on a finite interval
/// [a, b] where either p, p' or p', p'' have no zero.
TheoremVerdict check_rolle_correspondence(const Poly& p, const Rational& kappa, const Rational& a, const Rational& b);

/// For real simple-rooted p: H_c > 0 on I_s and I_{n-s+1} with
/// c = (n-s)/(n-s+1), s = 2..floor((n+1)/2).
TheoremVerdict check_interval_positivity(const Poly& p);

/// For even n >= 4: if some p^(k), k = 1..n-2, is real-rooted then
/// Z_R(H_{(n-1)/n}) + Z_R(p) > 0.
TheoremVerdict check_shapiro_criterion(const Poly& p);

/// Parity of Z_{I_k}(Q_k) on every interval of the partition, and at least
/// two zeros on finite first-type intervals when k <= 0.
std::vector<TheoremVerdict> check_interval_parity(const Poly& p, const Rational& kappa);
std::vector<TheoremVerdict> check_interval_parity(const CountReport& report);

/// For real simple-rooted p and (j-1)/j <= k < j/(j+1): finite intervals
/// carry 0 or 2 zeros of H_k, and exactly 0 on I_{n-j+1}..I_j when
/// j > floor(n/2).
TheoremVerdict check_finite_interval_counts(const Poly& p, const Rational& kappa);

/// Expected parity (0 even, 1 odd) of the Q count on one interval; nullopt
/// when no rule applies.
std::optional<int> expected_parity(const PartitionInterval& iv, int degree, const Rational& kappa, bool has_poles);

}  // namespace hawaii
