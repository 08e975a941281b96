#include "hawaii/trials.hpp"

#include "hawaii/polytext.hpp"

#include <algorithm>

namespace hawaii {

std::vector<Rational> TrialConfig::default_trial_kappas() {
  return {Rational(-10), Rational(-1),   Rational(0),    Rational(1, 10), Rational(1, 4),
          Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(2, 3),  Rational(5, 7),
          Rational(7, 9), Rational(1),    Rational(3, 2), Rational(7)};
}

void VerdictTally::add(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: ++pass; break;
    case Outcome::fail: ++fail; break;
    case Outcome::inapplicable: ++inapplicable; break;
    case Outcome::degenerate_range: ++degenerate_range; break;
    case Outcome::boundary: ++boundary; break;
  }
}

std::vector<TheoremVerdict> all_verdicts(const Poly& p, const std::vector<Rational>& kappas,
                                         const std::optional<std::pair<Rational, Rational>>& rolle_interval) {
  std::vector<TheoremVerdict> out;
  const Preconditions pre = check_preconditions(p);
  const IntervalPartition part = interval_partition(p);
  for (const auto& k : kappas) {
    const CountReport report = per_interval_counts(p, k, part);
    WholeLineCounts counts{report.z_r_h, report.z_r_q, report.degenerate_h};
    for (auto& v : judge(predict(pre, k), counts)) out.push_back(std::move(v));
    for (auto& v : check_interval_parity(report)) out.push_back(std::move(v));
    if (!report.degenerate_h) out.push_back(check_finite_interval_counts(p, k));
    if (rolle_interval && k != 0) {
      out.push_back(check_rolle_correspondence(p, k, rolle_interval->first, rolle_interval->second));
    }
  }
  out.push_back(check_laguerre(p));
  out.push_back(check_hawaii(p));
  out.push_back(check_interval_positivity(p));
  out.push_back(check_shapiro_criterion(p));
  return out;
}

TrialReport random_trials(const TrialConfig& cfg) {
  TrialReport report;
  report.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const Poly p = generate_polynomial(cfg.generator, rng);
    std::vector<Rational> kappas = cfg.kappas;
    const Rational top(p.degree() - 1, p.degree());
    if (cfg.include_top_kappa && std::find(kappas.begin(), kappas.end(), top) == kappas.end()) kappas.push_back(top);
    std::optional<std::pair<Rational, Rational>> rolle;
    if (cfg.include_rolle) {
      Rational a = random_rational(rng, 2 * cfg.generator.coeff_bound, 4);
      Rational width(random_int(rng, 1, 8), 4);
      width.canonicalize();
      Rational b = a + width;
      rolle = std::make_pair(a, b);
    }
    for (const auto& v : all_verdicts(p, kappas, rolle)) {
      report.tallies[v.id].add(v.outcome);
      if (v.failed()) {
        std::string detail = v.predicted.text;
        if (v.computed) detail += "; computed " + std::to_string(*v.computed);
        for (const auto& note : v.notes) detail += "; " + note;
        report.failures.push_back({t, format_poly(p), v.kappa, v.id, detail});
      }
    }
    ++report.trials_run;
  }
  return report;
}

}  // namespace hawaii
