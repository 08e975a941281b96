#include "hawaii/cli/cli.hpp"

#include "hawaii/cli/report.hpp"
#include "hawaii/hkappa.hpp"
#include "hawaii/polytext.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>

#ifndef HAWAII_VERSION
#define HAWAII_VERSION "0.0.0"
#endif

namespace hawaii::cli {

std::string version() { return HAWAII_VERSION; }

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Range {
  Rational lo;
  Rational hi;
  Rational step;
};

Rational parse_number(const std::string& text) {
  return text.find('.') != std::string::npos ? parse_decimal(text) : parse_rational(text);
}

Range parse_range(const std::string& text, const char* flag) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw UsageError(std::string(flag) + " expects lo:hi:step, got '" + text + "'");
  Range r{parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
  if (r.step <= 0) throw UsageError(std::string(flag) + " step must be positive");
  if (r.hi < r.lo) throw UsageError(std::string(flag) + " needs lo <= hi");
  return r;
}

std::vector<Rational> parse_kappas(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      const std::string item = text.substr(start, i - start);
      if (item.empty()) throw UsageError("empty entry in kappa list '" + text + "'");
      out.push_back(parse_number(item));
      start = i + 1;
    }
  }
  return out;
}

Poly parse_input_poly(const std::string& text) {
  Poly p = parse_poly(text);
  if (p.degree() < 2) throw UsageError("polynomial must have degree at least 2, got '" + text + "'");
  return p;
}

struct Envelope {
  std::string command;
  Json input = Json::object();
  Json result;
  std::string status = "ok";
};

void emit_json(std::ostream& out, const Envelope& env, std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  Json doc{{"tool", "hawaii"},
           {"version", version()},
           {"command", env.command},
           {"input", env.input},
           {"status", env.status},
           {"result", env.result},
           {"timing", Json{{"elapsed_ms", elapsed}}}};
  out << doc.dump(2) << "\n";
}

std::string end_label(const std::optional<AlgebraicNumber>& a, const char* infinity) {
  if (!a) return infinity;
  const AlgebraicNumber r = refine_and_snap(*a, Rational(1, 1 << 24));
  return r.is_exact() ? to_string(r.lo) : "~" + decimal(r.approx(), 6);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string poly;
  std::string kappa;
};

int run_analyze(const AnalyzeArgs& args, bool json, std::ostream& out, Envelope& env) {
  const Poly p = parse_input_poly(args.poly);
  const Rational kappa = parse_number(args.kappa);
  const CountReport report = per_interval_counts(p, kappa);
  env.input = Json{{"poly", format_poly(p)}, {"kappa", to_string(kappa)}};
  env.result = to_json(report);
  if (json) return exit_ok;

  out << "p      = " << pretty_poly(p) << "   (degree " << p.degree() << ")\n";
  out << "kappa  = " << to_string(kappa) << "\n";
  out << "H      = " << pretty_poly(report.hq.h) << "\n";
  if (report.degenerate_h) {
    out << "H vanishes identically at this kappa (degenerate)\n";
    return exit_ok;
  }
  out << "Q      = (" << pretty_poly(report.hq.q_num) << ") / (" << pretty_poly(report.hq.q_den) << ")\n";
  out << "Z_R(p) = " << report.z_r_p << "   Z_C(p) = " << report.z_c_p << "\n";
  out << "Z_R(H) = " << report.z_r_h << "   Z_R(Q) = " << report.z_r_q << "\n";
  if (report.at_poles_h) out << "zeros of H at poles: " << report.at_poles_h << "\n";
  out << "intervals:\n";
  for (std::size_t i = 0; i < report.partition.intervals.size(); ++i) {
    const auto& iv = report.partition.intervals[i];
    out << "  I_" << i + 1 << "  (" << end_label(iv.left, "-inf") << ", " << end_label(iv.right, "+inf") << ")  "
        << std::left << std::setw(6) << to_string(iv.kind) << " ends " << to_string(iv.left_end) << "/"
        << to_string(iv.right_end) << "  roots " << iv.roots_of_p << "  H " << report.per_interval[i].count_h
        << "  Q " << report.per_interval[i].count_q << "\n";
  }
  if (!report.consistent) out << "warning: per-interval counts do not add up to the totals\n";
  return exit_ok;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string poly;
  std::string range;
  bool exact = false;
  bool dodge = false;
  std::string plot;
  std::string plot_range = "-10:10:1/10";
};

void write_plot(const Poly& p, const std::string& file, const Range& grid) {
  std::ofstream csv(file);
  if (!csv) throw UsageError("cannot open plot file '" + file + "'");
  csv << "x,m,x_exact,m_exact\n";
  for (Rational x = grid.lo; x <= grid.hi; x += grid.step) {
    try {
      const Rational m = m_eval(p, x);
      csv << decimal(x, 6) << "," << decimal(m, 10) << "," << to_string(x) << "," << to_string(m) << "\n";
    } catch (const PoleError&) {
    }
  }
}

int run_sweep(const SweepArgs& args, bool json, std::ostream& out, Envelope& env) {
  const Poly p = parse_input_poly(args.poly);
  if (args.exact == !args.range.empty()) throw UsageError("sweep needs exactly one of --range or --exact");
  env.input = Json{{"poly", format_poly(p)}};
  if (!args.plot.empty()) {
    const Range grid = parse_range(args.plot_range, "--plot-range");
    write_plot(p, args.plot, grid);
    env.input["plot"] = args.plot;
    env.input["plot_range"] = args.plot_range;
  }
  if (args.exact) {
    env.input["mode"] = "exact";
    KappaBreakpoints bp;
    try {
      bp = kappa_breakpoints_exact(p);
    } catch (const BreakpointError& e) {
      throw UsageError(std::string("exact sweep unavailable: ") + e.what());
    }
    env.result = to_json(bp);
    if (json) return exit_ok;
    out << "p = " << pretty_poly(p) << "\n";
    out << "breakpoints:";
    if (bp.points.empty()) out << " none";
    out << "\n";
    for (std::size_t i = 0; i < bp.points.size(); ++i) {
      const auto& a = bp.points[i];
      out << "  k = " << (a.is_exact() ? to_string(a.lo) : "~" + decimal(a.approx(), 8));
      if (bp.at_points[i]) out << "   Z_R(H) = " << bp.at_points[i]->z_r_h << "  Z_R(Q) = " << bp.at_points[i]->z_r_q;
      out << "\n";
    }
    out << "gaps:\n";
    for (const auto& g : bp.gaps) {
      out << "  (" << end_label(g.lo, "-inf") << ", " << end_label(g.hi, "+inf") << ")  Z_R(H) = " << g.counts.z_r_h
          << "  Z_R(Q) = " << g.counts.z_r_q << "\n";
    }
    return exit_ok;
  }
  const Range r = parse_range(args.range, "--range");
  env.input["mode"] = "grid";
  env.input["range"] = args.range;
  env.input["dodge"] = args.dodge;
  const auto grid = kappa_sweep_grid(p, r.lo, r.hi, r.step, args.dodge);
  env.result = Json{{"points", to_json(grid)}};
  if (json) return exit_ok;
  out << "p = " << pretty_poly(p) << "\n";
  out << "kappa,z_r_h,z_r_q,flags\n";
  for (const auto& pt : grid) {
    out << to_string(pt.kappa) << "," << pt.counts.z_r_h << "," << pt.counts.z_r_q << ",";
    std::string flags;
    if (pt.counts.degenerate_h) flags += "degenerate ";
    if (pt.breakpoint) flags += "breakpoint ";
    if (pt.degree_drop) flags += "degree-drop ";
    if (pt.evaluated_at != pt.kappa) flags += "evaluated-at=" + to_string(pt.evaluated_at) + " ";
    if (!flags.empty()) flags.pop_back();
    out << flags << "\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string poly;
  std::string kappa;
  std::string rolle;
};

void print_verdicts(const std::vector<TheoremVerdict>& verdicts, std::ostream& out) {
  for (const auto& v : verdicts) {
    out << std::left << std::setw(16) << to_string(v.outcome) << std::setw(31) << v.id << " k = " << std::setw(6)
        << to_string(v.kappa);
    if (v.applicable) {
      out << "  " << v.predicted.text;
      if (v.computed) out << "; computed " << *v.computed;
    } else if (!v.reason.empty()) {
      out << "  (" << v.reason << ")";
    }
    out << "\n";
    for (const auto& note : v.notes) out << "    " << note << "\n";
  }
}

int run_verify(const VerifyArgs& args, bool json, std::ostream& out, Envelope& env) {
  const Poly p = parse_input_poly(args.poly);
  const auto kappas = parse_kappas(args.kappa);
  std::optional<std::pair<Rational, Rational>> rolle;
  Json kappa_json = Json::array();
  for (const auto& k : kappas) kappa_json.push_back(to_string(k));
  env.input = Json{{"poly", format_poly(p)}, {"kappa", kappa_json}};
  if (!args.rolle.empty()) {
    const auto colon = args.rolle.find(':');
    if (colon == std::string::npos) throw UsageError("--rolle expects a:b");
    rolle = std::make_pair(parse_number(args.rolle.substr(0, colon)), parse_number(args.rolle.substr(colon + 1)));
    if (!(rolle->first < rolle->second)) throw UsageError("--rolle needs a < b");
    env.input["rolle"] = args.rolle;
  }
  const auto verdicts = all_verdicts(p, kappas, rolle);
  int failed = 0;
  Json list = Json::array();
  for (const auto& v : verdicts) {
    failed += v.failed() ? 1 : 0;
    list.push_back(to_json(v));
  }
  const int code = failed ? exit_verdict_failed : exit_ok;
  env.status = failed ? "failed" : "ok";
  env.result = Json{{"preconditions", to_json(check_preconditions(p))}, {"failed", failed}, {"verdicts", list}};
  if (json) return code;
  out << "p = " << pretty_poly(p) << "\n";
  print_verdicts(verdicts, out);
  out << (failed ? std::to_string(failed) + " verdict(s) failed" : std::string("no applicable verdict failed")) << "\n";
  return code;
}

// ---------------------------------------------------------------- trials

struct TrialsArgs {
  std::string mode = "arbitrary";
  int trials = 100;
  std::uint64_t seed = 1;
  int min_degree = 2;
  int max_degree = 8;
  int coeff_bound = 10;
  std::string kappa;
  bool no_rolle = false;
  bool no_top_kappa = false;
};

int run_trials(const TrialsArgs& args, bool json, std::ostream& out, Envelope& env) {
  const auto mode = parse_root_mode(args.mode);
  if (!mode) throw UsageError("unknown mode '" + args.mode + "'");
  if (args.trials < 0) throw UsageError("--trials must be non-negative");
  TrialConfig cfg;
  cfg.generator.mode = *mode;
  cfg.generator.min_degree = args.min_degree;
  cfg.generator.max_degree = args.max_degree;
  cfg.generator.coeff_bound = args.coeff_bound;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  if (!args.kappa.empty()) cfg.kappas = parse_kappas(args.kappa);
  cfg.include_rolle = !args.no_rolle;
  cfg.include_top_kappa = !args.no_top_kappa;
  if (cfg.generator.min_degree < 2 || cfg.generator.max_degree < cfg.generator.min_degree) {
    throw UsageError("invalid degree range");
  }
  if (cfg.generator.coeff_bound < 1) throw UsageError("--coeff-bound must be positive");
  const TrialReport report = random_trials(cfg);
  env.input = Json{{"mode", to_string(*mode)}, {"trials", args.trials}, {"seed", args.seed}};
  env.result = to_json(report);
  const int code = report.total_failures() ? exit_verdict_failed : exit_ok;
  env.status = code ? "failed" : "ok";
  if (json) return code;
  out << "mode " << to_string(*mode) << ", " << report.trials_run << " trials, seed " << args.seed << ", degree "
      << cfg.generator.min_degree << ".." << cfg.generator.max_degree << "\n";
  out << std::left << std::setw(31) << "verdict" << std::right << std::setw(7) << "pass" << std::setw(7) << "fail"
      << std::setw(8) << "n/a" << std::setw(8) << "range" << std::setw(10) << "boundary" << "\n";
  for (const auto& [id, t] : report.tallies) {
    out << std::left << std::setw(31) << id << std::right << std::setw(7) << t.pass << std::setw(7) << t.fail
        << std::setw(8) << t.inapplicable << std::setw(8) << t.degenerate_range << std::setw(10) << t.boundary << "\n";
  }
  for (const auto& f : report.failures) {
    out << "FAIL trial " << f.trial << " " << f.verdict << " p=" << f.poly << " k=" << to_string(f.kappa) << ": "
        << f.detail << "\n";
  }
  out << report.total_failures() << " failure(s)\n";
  return code;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  std::string name;
  std::vector<std::string> params;
  bool list = false;
};

int run_family(const FamilyArgs& args, bool json, std::ostream& out, Envelope& env) {
  if (args.list || args.name.empty()) {
    Json names = Json::array();
    for (const auto& name : family_names()) {
      names.push_back(Json{{"name", name}, {"params", family_parameters(name)}});
      if (!json) {
        out << name;
        for (const auto& param : family_parameters(name)) out << " " << param << "=...";
        out << "\n";
      }
    }
    env.result = Json{{"families", names}};
    if (!args.list) throw UsageError("family needs a name (use --list)");
    return exit_ok;
  }
  std::map<std::string, Rational> params;
  Json param_json = Json::object();
  for (const auto& kv : args.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    params[key] = parse_number(kv.substr(eq + 1));
    param_json[key] = to_string(params[key]);
  }
  env.input = Json{{"family", args.name}, {"params", param_json}};
  const FamilyInstance family = make_family(args.name, params);
  env.result = to_json(family);
  const int code = family.all_hold() ? exit_ok : exit_verdict_failed;
  env.status = code ? "failed" : "ok";
  if (json) return code;
  out << family.name;
  for (const auto& [k, v] : family.params) out << " " << k << "=" << to_string(v);
  out << "\np = " << pretty_poly(family.p) << "\n";
  for (const auto& c : family.claims) {
    out << (!c.asserted ? "NOTE " : c.holds ? "PASS " : "FAIL ") << c.description << "  [" << c.detail << "]\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Exact zero counts for H_k[p] = k p'^2 - p p'' and Q_k[p] = H_k[p] / p'^2", "hawaii"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  bool json = false;

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "counts and interval partition at one kappa");
  analyze_cmd->add_option("poly", analyze.poly, "polynomial: c0,c1,...,cn or roots:r1,...;lc:c")->required();
  analyze_cmd->add_option("--kappa", analyze.kappa, "rational kappa")->required();
  analyze_cmd->add_flag("--json", json, "emit a JSON report");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "zero counts as kappa varies");
  sweep_cmd->add_option("poly", sweep.poly, "polynomial")->required();
  sweep_cmd->add_option("--range", sweep.range, "grid lo:hi:step");
  sweep_cmd->add_flag("--exact", sweep.exact, "exact breakpoints and per-gap counts");
  sweep_cmd->add_flag("--dodge", sweep.dodge, "evaluate grid points on breakpoints slightly to the right");
  sweep_cmd->add_option("--plot", sweep.plot, "write M[p] samples as CSV to this file");
  sweep_cmd->add_option("--plot-range", sweep.plot_range, "sample grid for --plot, lo:hi:step");
  sweep_cmd->add_flag("--json", json, "emit a JSON report");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check every applicable statement on one polynomial");
  verify_cmd->add_option("poly", verify.poly, "polynomial")->required();
  verify_cmd->add_option("--kappa", verify.kappa, "comma separated kappas")->required();
  verify_cmd->add_option("--rolle", verify.rolle, "interval a:b for the Rolle correspondence check");
  verify_cmd->add_flag("--json", json, "emit a JSON report");

  TrialsArgs trials;
  auto* trials_cmd = app.add_subcommand("trials", "seeded randomized verification campaign");
  trials_cmd->add_option("--mode", trials.mode, "arbitrary | p-real-simple | dp-real-simple | both");
  trials_cmd->add_option("--trials", trials.trials, "number of polynomials");
  trials_cmd->add_option("--seed", trials.seed, "64-bit seed");
  trials_cmd->add_option("--min-degree", trials.min_degree, "smallest degree");
  trials_cmd->add_option("--max-degree", trials.max_degree, "largest degree");
  trials_cmd->add_option("--coeff-bound", trials.coeff_bound, "coefficient bound");
  trials_cmd->add_option("--kappa", trials.kappa, "comma separated kappas (replaces the default list)");
  trials_cmd->add_flag("--no-rolle", trials.no_rolle, "skip the Rolle correspondence check");
  trials_cmd->add_flag("--no-top-kappa", trials.no_top_kappa, "do not add k = (n-1)/n per polynomial");
  trials_cmd->add_flag("--json", json, "emit a JSON report");

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "named polynomial families and their claims");
  family_cmd->add_option("name", family.name, "family name");
  family_cmd->add_option("--param", family.params, "parameter key=value (repeatable)");
  family_cmd->add_flag("--list", family.list, "list family names and parameters");
  family_cmd->add_flag("--json", json, "emit a JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Envelope env;
  int code = exit_ok;
  try {
    if (analyze_cmd->parsed()) {
      env.command = "analyze";
      code = run_analyze(analyze, json, out, env);
    } else if (sweep_cmd->parsed()) {
      env.command = "sweep";
      code = run_sweep(sweep, json, out, env);
    } else if (verify_cmd->parsed()) {
      env.command = "verify";
      code = run_verify(verify, json, out, env);
    } else if (trials_cmd->parsed()) {
      env.command = "trials";
      code = run_trials(trials, json, out, env);
    } else {
      env.command = "family";
      code = run_family(family, json, out, env);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const SearchError& e) {
    err << "error: search failed at step " << e.step() << ": " << e.what() << "\n";
    return exit_verdict_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  if (json) emit_json(out, env, started);
  return code;
}

}  // namespace hawaii::cli
