#pragma once

// Seeded randomized campaigns running every verdict on generated inputs.

#include "hawaii/generators.hpp"
#include "hawaii/theorems.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hawaii {

struct TrialConfig {
  GeneratorConfig generator;
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<Rational> kappas = default_trial_kappas();
  bool include_top_kappa = true;  // also evaluate at k = (n-1)/n
  bool include_rolle = true;

  static std::vector<Rational> default_trial_kappas();
};

struct VerdictTally {
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
  int degenerate_range = 0;
  int boundary = 0;

  void add(Outcome outcome);
};

struct TrialFailure {
  int trial = 0;
  std::string poly;  // polynomial text format, for replay
  Rational kappa;
  std::string verdict;
  std::string detail;
};

struct TrialReport {
  TrialConfig config;
  int trials_run = 0;
  std::map<std::string, VerdictTally> tallies;
  std::vector<TrialFailure> failures;

  int total_failures() const { return static_cast<int>(failures.size()); }
};

/// All verdicts for one polynomial: whole-line predictions at each k, interval
/// parity, finite-interval counts, Laguerre, Hawaii, interval positivity, the
/// even-degree criterion and, when rolle_interval is given, the Rolle
/// correspondence at every nonzero k.
std::vector<TheoremVerdict> all_verdicts(const Poly& p, const std::vector<Rational>& kappas,
                                         const std::optional<std::pair<Rational, Rational>>& rolle_interval);

/// Deterministic in cfg: trial i draws from one mt19937_64 stream seeded with cfg.seed.
TrialReport random_trials(const TrialConfig& cfg);

}  // namespace hawaii
