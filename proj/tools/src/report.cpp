#include "hawaii/cli/report.hpp"

#include "hawaii/polytext.hpp"

namespace hawaii::cli {

std::string decimal(const Rational& r, int digits) {
  const bool negative = r < 0;
  const Rational a = abs(r);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer scaled = floor(a * scale);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + body;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"text", format_poly(p)}, {"pretty", pretty_poly(p)}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

Json to_json(const AlgebraicNumber& root) {
  const AlgebraicNumber a = refine_and_snap(root, Rational(1, 1 << 30));
  if (a.is_exact()) return Json{{"exact", to_string(a.lo)}, {"approx", decimal(a.lo)}, {"multiplicity", a.multiplicity}};
  return Json{{"lo", to_string(a.lo)},
              {"hi", to_string(a.hi)},
              {"approx", decimal(a.approx())},
              {"defining", format_poly(a.defining)},
              {"multiplicity", a.multiplicity}};
}

Json to_json(const std::optional<AlgebraicNumber>& a, const char* infinity) {
  return a ? to_json(*a) : Json(infinity);
}

Json to_json(const WholeLineCounts& c) {
  return Json{{"z_r_h", c.z_r_h}, {"z_r_q", c.z_r_q}, {"degenerate_h", c.degenerate_h}};
}

Json to_json(const CountReport& report) {
  Json poles = Json::array();
  for (std::size_t i = 0; i < report.partition.poles.size(); ++i) {
    const auto& tags = report.partition.pole_tags[i];
    poles.push_back(Json{{"at", to_json(report.partition.poles[i])},
                         {"s", tags.s},
                         {"sigma", tags.sigma},
                         {"as_right_end", to_string(tags.left_side)},
                         {"as_left_end", to_string(tags.right_side)}});
  }
  Json intervals = Json::array();
  for (std::size_t i = 0; i < report.partition.intervals.size(); ++i) {
    const auto& iv = report.partition.intervals[i];
    Json row{{"index", i + 1},
             {"left", to_json(iv.left, "-inf")},
             {"right", to_json(iv.right, "+inf")},
             {"kind", to_string(iv.kind)},
             {"left_end", to_string(iv.left_end)},
             {"right_end", to_string(iv.right_end)},
             {"roots_of_p", iv.roots_of_p}};
    if (!report.degenerate_h) {
      row["count_h"] = report.per_interval[i].count_h;
      row["count_q"] = report.per_interval[i].count_q;
    }
    intervals.push_back(std::move(row));
  }
  Json out{{"kappa", to_json(report.kappa)},
           {"n", report.n},
           {"z_r_p", report.z_r_p},
           {"z_c_p", report.z_c_p},
           {"degenerate_h", report.degenerate_h},
           {"h", to_json(report.hq.h)}};
  if (!report.degenerate_h) {
    out["q_numerator"] = to_json(report.hq.q_num);
    out["q_denominator"] = to_json(report.hq.q_den);
    out["z_r_h"] = report.z_r_h;
    out["z_r_q"] = report.z_r_q;
    out["at_poles_h"] = report.at_poles_h;
    out["at_poles_q"] = report.at_poles_q;
    out["consistent"] = report.consistent;
  }
  out["poles"] = std::move(poles);
  out["intervals"] = std::move(intervals);
  return out;
}

Json to_json(const Preconditions& pre) {
  return Json{{"degree", pre.degree},
              {"z_r_p", pre.z_r_p},
              {"distinct_real_p", pre.distinct_real_p},
              {"distinct_real_dp", pre.distinct_real_dp},
              {"p_real_roots_simple", pre.p_real_roots_simple},
              {"p_prime_real_simple", pre.p_prime_real_simple},
              {"p_real_rooted_simple", pre.p_real_rooted_simple},
              {"p_real_rooted", pre.p_real_rooted},
              {"perfect_power", pre.perfect_power}};
}

Json to_json(const TheoremVerdict& v) {
  Json out{{"id", v.id}, {"kappa", to_json(v.kappa)}, {"outcome", to_string(v.outcome)}, {"applicable", v.applicable}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.applicable) {
    Json pred{{"counts", v.predicted.target == Counted::h ? "H" : "Q"}, {"statement", v.predicted.text}};
    pred["lo"] = v.predicted.lo ? Json(*v.predicted.lo) : Json(nullptr);
    pred["hi"] = v.predicted.hi ? Json(*v.predicted.hi) : Json(nullptr);
    out["predicted"] = std::move(pred);
  }
  out["computed"] = v.computed ? Json(*v.computed) : Json(nullptr);
  out["asserted"] = v.assert_prediction;
  out["notes"] = v.notes;
  return out;
}

Json to_json(const std::vector<SweepPoint>& grid) {
  Json rows = Json::array();
  for (const auto& pt : grid) {
    Json row{{"kappa", to_json(pt.kappa)}};
    if (pt.evaluated_at != pt.kappa) row["evaluated_at"] = to_json(pt.evaluated_at);
    row["z_r_h"] = pt.counts.z_r_h;
    row["z_r_q"] = pt.counts.z_r_q;
    row["degenerate_h"] = pt.counts.degenerate_h;
    row["breakpoint"] = pt.breakpoint;
    row["degree_drop"] = pt.degree_drop;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const KappaBreakpoints& bp) {
  Json points = Json::array();
  for (std::size_t i = 0; i < bp.points.size(); ++i) {
    Json row{{"at", to_json(bp.points[i])}};
    if (bp.at_points[i]) row["counts"] = to_json(*bp.at_points[i]);
    points.push_back(std::move(row));
  }
  Json gaps = Json::array();
  for (const auto& g : bp.gaps) {
    gaps.push_back(Json{{"lo", to_json(g.lo, "-inf")},
                        {"hi", to_json(g.hi, "+inf")},
                        {"sample", to_json(g.sample)},
                        {"counts", to_json(g.counts)}});
  }
  return Json{{"breakpoints", std::move(points)}, {"gaps", std::move(gaps)}};
}

Json to_json(const TrialReport& report) {
  const auto& cfg = report.config;
  Json kappas = Json::array();
  for (const auto& k : cfg.kappas) kappas.push_back(to_json(k));
  Json config{{"mode", to_string(cfg.generator.mode)},
              {"min_degree", cfg.generator.min_degree},
              {"max_degree", cfg.generator.max_degree},
              {"coeff_bound", cfg.generator.coeff_bound},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"kappas", std::move(kappas)},
              {"include_top_kappa", cfg.include_top_kappa},
              {"include_rolle", cfg.include_rolle}};
  Json tallies = Json::object();
  for (const auto& [id, t] : report.tallies) {
    tallies[id] = Json{{"pass", t.pass},
                       {"fail", t.fail},
                       {"inapplicable", t.inapplicable},
                       {"degenerate_range", t.degenerate_range},
                       {"boundary", t.boundary}};
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"trial", f.trial},
                            {"poly", f.poly},
                            {"kappa", to_json(f.kappa)},
                            {"verdict", f.verdict},
                            {"detail", f.detail}});
  }
  return Json{{"config", std::move(config)},
              {"trials_run", report.trials_run},
              {"total_failures", report.total_failures()},
              {"tallies", std::move(tallies)},
              {"failures", std::move(failures)}};
}

Json to_json(const FamilyInstance& family) {
  Json params = Json::object();
  for (const auto& [k, v] : family.params) params[k] = to_json(v);
  Json claims = Json::array();
  for (const auto& c : family.claims) {
    claims.push_back(Json{{"claim", c.description},
                          {"asserted", c.asserted},
                          {"holds", c.holds},
                          {"status", !c.asserted ? "reported" : c.holds ? "PASS" : "FAIL"},
                          {"detail", c.detail}});
  }
  return Json{{"family", family.name},
              {"params", std::move(params)},
              {"p", to_json(family.p)},
              {"all_hold", family.all_hold()},
              {"claims", std::move(claims)}};
}

}  // namespace hawaii::cli
