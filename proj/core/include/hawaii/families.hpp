#pragma once

// Named polynomial families with their exact claims, the Chebyshev sharpness
// search and the inductive construction of polynomials whose M function
// approaches (k-1)/k on prescribed intervals.

#include "hawaii/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hawaii {

/// Invalid family parameters or unknown family name.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One exact fact about a family instance. Claims with asserted == false are
/// computed and reported but carry no expectation.
struct Claim {
  std::string description;
  bool holds = false;
  bool asserted = true;
  std::string detail;
};

struct FamilyInstance {
  std::string name;
  std::vector<std::pair<std::string, Rational>> params;
  Poly p;
  std::vector<Claim> claims;

  /// True when every asserted claim holds.
  bool all_hold() const;
};

/// p = (x^2 + a^2)(x + a^2)(x - 1), a not in {-1, 0, 1}.
FamilyInstance family_shapiro1_deg4(const Rational& a);
/// p = (x - 1)^n + (x + 1)^n, n >= 2; claims are asserted for n >= 5 only.
FamilyInstance family_binomial_sym(int n);
/// p = x^n + a x^(n-2), n >= 3, a > 0.
FamilyInstance family_monomial_gap(int n, const Rational& a);
/// p = x^(2n) / (2n) + x^2 / 2 + 1, n >= 2.
FamilyInstance family_shapiro2(int n);
/// Chebyshev polynomial of the first kind by the three-term recurrence.
Poly chebyshev_t(int n);
/// p = x^2 (x - 1)(x - 2)(x + 10) + 1/10.
FamilyInstance section16_example();

/// Failure of one of the two searches. step is the search step that could
/// not be completed (0 for the Chebyshev search).
class SearchError : public std::runtime_error {
 public:
  SearchError(const std::string& message, int step) : std::runtime_error(message), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

struct ChebyshevSearchResult {
  int n = 0;
  Rational b;  // the polynomial is T_2n - 1 + b
  Poly p;
  int expected = 0;  // 4n - 2
  std::vector<std::pair<Rational, int>> verification;  // (k, Z_R(Q_k))
};

/// Tries b = 1/4, 1/8, ... and returns the first b for which Z_R(Q_k) = 4n - 2
/// at k = 1/10, 1/4 and 1/2 - eps. Throws SearchError below 2^-40.
/// Requires n >= 1 and 0 < eps < 1/2.
ChebyshevSearchResult theorem7_search(int n, const Rational& eps);

struct InductiveWitness {
  int interval = 0;  // index j of the interval I_j containing y
  Rational lo;       // carried check interval [lo, hi]
  Rational hi;
  Rational y;
  Rational bound;  // (j - 1)/j - eps
  Rational m_at_y;
};

struct InductiveBuildResult {
  int n = 0;
  Poly p;
  std::vector<Rational> roots;  // ascending
  std::vector<InductiveWitness> witnesses;  // ordered by interval index
};

/// Starts from x^(n-1)(x - 1) and splits the multiple root at 0 one simple
/// root at a time. Each carried interval [d/4, d/2] is verified exactly to
/// be free of critical points with M[p] above its target. Requires n >= 3 and
/// 0 < eps < 1/2; throws SearchError naming the failing step.
InductiveBuildResult theorem10_build(int n, const Rational& eps);

/// Family names accepted by make_family, in display order.
std::vector<std::string> family_names();
/// Names of the parameters make_family reads for a family.
std::vector<std::string> family_parameters(const std::string& name);
/// Builds a family by name. Missing parameters take documented defaults;
/// unknown names and unused parameters raise FamilyError.
FamilyInstance make_family(const std::string& name, const std::map<std::string, Rational>& params);

}  // namespace hawaii
