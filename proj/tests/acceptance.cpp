// Acceptance run: one line per criterion and NOTE lines for reported
// observations. A criterion is PASS when every case holds, DEVIATION when the
// only violations are inputs on which the checked inequality itself is false
// (each one recounted by the independent oracle), and FAIL otherwise.
// Exit status is 0 when no criterion is FAIL.

#include "hawaii/families.hpp"
#include "hawaii/generators.hpp"
#include "hawaii/hkappa.hpp"
#include "hawaii/partition.hpp"
#include "hawaii/prs.hpp"
#include "hawaii/sweep.hpp"
#include "hawaii/theorems.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hawaii;
using testsupport::P;
using testsupport::R;
using testsupport::to_oracle;

namespace {

struct Check {
  bool ok = true;
  int deviations = 0;
  std::string first_deviation;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void deviation(const std::string& what) {
    if (deviations++ == 0) first_deviation = what;
  }

  void fail(const std::string& what) {
    if (ok) detail << "first failure: " << what << "; ";
    ok = false;
  }
  void check(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

int failures = 0;
int deviating = 0;

void criterion(int index, const std::string& name, const std::function<void(Check&)>& body) {
  Check out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* status = !out.ok ? "FAIL" : out.deviations > 0 ? "DEVIATION" : "PASS";
  if (!out.ok) ++failures;
  else if (out.deviations > 0) ++deviating;
  if (out.deviations > 0) {
    out.detail << out.deviations << " confirmed counterexample(s) to the statement, first: " << out.first_deviation << "; ";
  }
  std::cout << status << " " << (index < 10 ? "0" : "") << index << " " << name << ": " << out.detail.str() << "("
            << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  for (const auto& n : out.notes) std::cout << "NOTE " << (index < 10 ? "0" : "") << index << " " << n << std::endl;
}

int z_r(const Poly& p) { return count_roots_with_multiplicity(p); }
int z_c(const Poly& p) { return p.degree() - z_r(p); }

Poly draw(std::mt19937_64& rng, RootMode mode, int min_degree, int max_degree, int coeff_bound = 10) {
  GeneratorConfig cfg;
  cfg.mode = mode;
  cfg.min_degree = min_degree;
  cfg.max_degree = max_degree;
  cfg.coeff_bound = coeff_bound;
  return generate_polynomial(cfg, rng);
}

std::string show(const Poly& p) { return format_poly(p); }
std::string show(const Poly& p, const Rational& k) { return format_poly(p) + " at k=" + to_string(k); }

// Reduced numerator of Q = H / (p')^2 computed from the naive expansion.
oracle::P oracle_q_numerator(const Poly& p, const Rational& k) {
  const oracle::P o = to_oracle(p);
  const oracle::P h = oracle::h_naive(o, k);
  const oracle::P d = oracle::deriv(o);
  return oracle::divmod(h, oracle::gcd(h, oracle::mul(d, d))).first;
}

bool oracle_has_repeated_real_root(const Poly& p) {
  const oracle::P o = to_oracle(p);
  const oracle::P g = oracle::gcd(o, oracle::deriv(o));
  return oracle::deg(g) >= 1 && oracle::distinct_roots(g) > 0;
}

bool is_breakpoint(const Poly& p, const Rational& k) {
  if (k == Rational(p.degree() - 1, p.degree())) return true;
  return breakpoint_polynomial(p)(k) == 0;
}

}  // namespace

int main() {
  criterion(1, "laguerre on real simple-rooted input", [](Check& o) {
    std::mt19937_64 rng(1001);
    for (int t = 0; t < 200; ++t) {
      const Poly p = draw(rng, RootMode::p_real_simple, 2, 8);
      const Poly h = h_kappa(p, 1);
      o.check(z_r(h) == 0, show(p));
      o.check(oracle::roots_with_multiplicity(to_oracle(h)) == 0, "oracle " + show(p));
      o.check(check_laguerre(p).outcome == Outcome::pass, "verdict " + show(p));
    }
    o.detail << "200 polynomials, Z_R(H_1) = 0 throughout; ";
  });

  criterion(2, "hawaii inequality with simple real roots", [](Check& o) {
    std::mt19937_64 rng(1002);
    int done = 0;
    while (done < 200) {
      const Poly p = draw(rng, RootMode::arbitrary, 2, 8);
      if (!check_preconditions(p).p_real_roots_simple) continue;
      ++done;
      const int zh = z_r(h_kappa(p, 1));
      o.check(zh <= z_c(p), show(p));
      o.check(zh == oracle::roots_with_multiplicity(to_oracle(h_kappa(p, 1))), "oracle " + show(p));
    }
    o.detail << "200 polynomials; ";
  });

  // Inputs for the next three: p with simple real roots, p' real simple.
  std::vector<Poly> simple_class;
  {
    std::mt19937_64 rng(1003);
    for (int t = 0; t < 100; ++t) simple_class.push_back(draw(rng, RootMode::both, 2, 8));
  }

  criterion(3, "large-kappa equality Z_R(H) = Z_C(p)", [&](Check& o) {
    int checks = 0, quadratic_exceptions = 0, quadratics = 0;
    for (const auto& p : simple_class) {
      const int n = p.degree();
      if (n == 2) ++quadratics;
      for (const Rational& k : {Rational(n - 1, n), Rational(1), R("3/2"), Rational(7)}) {
        const int zh = whole_line_counts(p, k).z_r_h;
        ++checks;
        if (zh == z_c(p)) continue;
        const oracle::P h = oracle::h_naive(to_oracle(p), k);
        if (n == 2 && k == Rational(1, 2) && oracle::deg(h) == 0 && oracle::distinct_roots(to_oracle(p)) == 0) {
          ++quadratic_exceptions;
          o.deviation(show(p, k) + ": H = " + h[0].get_str() + ", Z_C(p) = 2");
          continue;
        }
        o.fail(show(p, k) + " computed " + std::to_string(zh));
      }
    }
    o.detail << checks << " (p, k) pairs; ";
    o.notes.push_back("degree 2 at k = 1/2: " + std::to_string(quadratic_exceptions) + " of " +
                      std::to_string(quadratics) +
                      " quadratics have complex roots; there H is a nonzero constant, so Z_R(H) = 0 < 2 = Z_C(p)."
                      " Every other (p, k) pair satisfies the equality");
  });

  criterion(4, "nonpositive-kappa equality Z_R(H) = n + Z_R(p) - 2", [&](Check& o) {
    for (const auto& p : simple_class) {
      for (const Rational& k : {Rational(0), Rational(-1), Rational(-10)}) {
        const int zh = whole_line_counts(p, k).z_r_h;
        o.check(zh == p.degree() + z_r(p) - 2, show(p, k));
      }
    }
    o.detail << "300 (p, k) pairs; ";
  });

  criterion(5, "small-kappa sandwich", [&](Check& o) {
    for (const auto& p : simple_class) {
      for (const char* k : {"1/10", "1/4", "2/5"}) {
        const int zh = whole_line_counts(p, R(k)).z_r_h;
        o.check(z_c(p) - 2 <= zh && zh <= p.degree() + z_r(p) - 2, show(p, R(k)));
      }
    }
    o.detail << "300 (p, k) pairs; ";
  });

  criterion(6, "real-rooted regime sandwich 2 <= Z_R(H) <= 2n - 2k", [](Check& o) {
    std::mt19937_64 rng(1006);
    int checks = 0;
    for (int t = 0; t < 100; ++t) {
      const Poly p = draw(rng, RootMode::p_real_simple, 3, 8);
      const int n = p.degree();
      for (int k = 2; 2 * n - 2 * k >= 2; ++k) {
        const Rational kappa = midpoint(Rational(k - 1, k), Rational(k, k + 1));
        const int zh = whole_line_counts(p, kappa).z_r_h;
        ++checks;
        o.check(2 <= zh && zh <= 2 * n - 2 * k, show(p, kappa) + " computed " + std::to_string(zh));
      }
    }
    o.detail << checks << " (p, regime) pairs; ";
  });

  criterion(7, "binomial symmetric family exceeds Z_C", [](Check& o) {
    for (int n = 5; n <= 10; ++n) {
      const Poly p = P("-1,1").pow(static_cast<unsigned>(n)) + P("1,1").pow(static_cast<unsigned>(n));
      const Poly h = h_kappa(p, Rational(n - 1, n));
      o.check(h == Rational(-4 * n * (n - 1)) * P("-1,0,1").pow(static_cast<unsigned>(n - 2)), "identity n=" + std::to_string(n));
      const int zh = z_r(h);
      o.check(zh == 2 * n - 4, "count n=" + std::to_string(n));
      o.check(z_c(p) == 2 * (n / 2), "Z_C n=" + std::to_string(n));
      o.check(zh > z_c(p), "strict n=" + std::to_string(n));
      o.check(family_binomial_sym(n).all_hold(), "family n=" + std::to_string(n));
    }
    o.detail << "n = 5..10; ";
  });

  criterion(8, "degree-4 counterexample family", [](Check& o) {
    for (const char* a_text : {"2", "3", "-1/2"}) {
      const Rational a = R(a_text);
      const Poly p = Poly{a * a, 0, 1} * Poly{a * a, 1} * P("-1,1");
      const Poly lhs = R("4/3") * h_kappa(p, R("3/4"));
      const Poly rhs = Poly{-a * (a + 1), a - 1}.pow(2) * Poly{a * (a - 1), a + 1}.pow(2);
      o.check(lhs == rhs, std::string("identity a=") + a_text);
      o.check(z_r(lhs) == 4 && z_c(p) == 2, std::string("counts a=") + a_text);
    }
    o.detail << "a in {2, 3, -1/2}; ";
  });

  criterion(9, "even-degree family without real zeros", [](Check& o) {
    for (int n = 2; n <= 6; ++n) {
      const Poly p = Poly::monomial(Rational(1, 2 * n), 2 * n) + P("1,0,1/2");
      const Poly h = h_kappa(p, Rational(2 * n - 1, 2 * n));
      o.check(z_r(h) == 0, "count n=" + std::to_string(n));
      const Poly expected = Poly::monomial(2 * n * n - 5 * n + 3, 2 * n) +
                            Poly::monomial(2 * n * (2 * n - 1), 2 * n - 2) + Poly::monomial(-(n - 1), 2) +
                            Poly::constant(2 * n);
      o.check(Rational(-2 * n) * h == expected, "identity n=" + std::to_string(n));
      if (n == 2) o.check(Rational(-4) * h == P("4,0,11,0,1"), "n=2 closed form");
    }
    o.detail << "n = 2..6; ";
  });

  criterion(10, "monomial-gap family at the interval midpoint", [](Check& o) {
    std::ostringstream ends;
    for (int n = 3; n <= 6; ++n) {
      const Poly p = Poly::monomial(1, n) + Poly::monomial(1, n - 2);
      const Rational left(n - 1, n);
      const Rational right((2 * n - 3) * (2 * n - 3), 4 * n * (n - 2));
      const int mid = whole_line_counts(p, midpoint(left, right)).z_r_q;
      o.check(mid == 4, "midpoint n=" + std::to_string(n));
      ends << " n=" << n << ": left " << whole_line_counts(p, left).z_r_q << ", right "
           << whole_line_counts(p, right).z_r_q << ";";
    }
    o.detail << "n = 3..6, Z_R(Q) = 4 at each midpoint; ";
    o.notes.push_back("endpoint counts of Z_R(Q):" + ends.str() +
                      " the closed-interval claim fails at the left end, where the count is 2");
  });

  criterion(11, "chebyshev sharpness search", [](Check& o) {
    for (int n = 1; n <= 3; ++n) {
      const ChebyshevSearchResult r = theorem7_search(n, R("1/10"));
      o.check(r.p == chebyshev_t(2 * n) - P("1") + Poly::constant(r.b), "shape n=" + std::to_string(n));
      for (const char* k : {"1/10", "1/4", "2/5"}) {
        const Poly num = q_reduced(r.p, R(k)).q_num;
        o.check(oracle::roots_with_multiplicity(to_oracle(num)) == 4 * n - 2, "oracle n=" + std::to_string(n) + " k=" + k);
        o.check(whole_line_counts(r.p, R(k)).z_r_q == 4 * n - 2, "sturm n=" + std::to_string(n) + " k=" + k);
      }
      o.detail << "n=" << n << " b=" << to_string(r.b) << "; ";
    }
  });

  criterion(12, "worked degree-5 example", [](Check& o) {
    const Poly p = P("1/10,0,20,-28,7,1");
    const Poly dp = p.derivative();
    o.check(dp == P("0,40,-84,28,5"), "derivative");
    const RootList xi = isolate_roots(dp);
    o.check(xi.size() == 4, "four critical points");
    const char* approx[] = {"-7865/1000", "0", "617/1000", "1648/1000"};
    for (std::size_t i = 0; i < xi.size() && i < 4; ++i) {
      const Rational c = R(approx[i]);
      o.check(compare(xi[i], c - R("1/1000")) > 0 && compare(xi[i], c + R("1/1000")) < 0, std::string("bracket ") + approx[i]);
    }
    const RootCounter q(q_reduced(p, R("2/3")).q_num);
    o.check(q.count_between(xi[0], xi[1]) == 3, "three zeros of Q_{2/3} in (xi_1, 0)");
    const Poly qn = q_reduced(p, R("2/3")).q_num;
    o.check(oracle::roots_with_multiplicity(to_oracle(qn), refine(xi[0], R("1/1000")).hi, Rational(0)) == 3,
            "oracle count in (xi_1, 0)");
    const Rational m1 = m_eval(p, R("-11/40"));
    const Rational m2 = m_eval(p, R("-27/20"));
    o.check(R("641/1000") < m1 && m1 < R("643/1000"), "M(-11/40)");
    o.check(R("683/1000") < m2 && m2 < R("685/1000"), "M(-27/20)");
    o.detail << "M(-11/40) = " << to_double(m1) << ", M(-27/20) = " << to_double(m2) << "; ";
  });

  criterion(13, "jensen sum equals |p(x+iy)|^2", [](Check& o) {
    std::mt19937_64 rng(1013);
    for (int t = 0; t < 100; ++t) {
      const Poly p = draw(rng, RootMode::arbitrary, 1 + static_cast<int>(random_int(rng, 1, 5)), 6);
      const Rational x = random_rational(rng, 4, 5);
      const Rational y = random_rational(rng, 4, 5);
      Rational sum = 0, y2k = 1;
      for (int k = 0; k <= p.degree(); ++k) {
        sum += jensen_pk(p, k)(x) * y2k / Rational(factorial(static_cast<unsigned>(2 * k)));
        y2k *= y * y;
      }
      const auto [re, im] = oracle::eval_complex(to_oracle(p), x, y);
      o.check(sum == re * re + im * im, show(p));
    }
    o.detail << "100 (p, x, y) triples; ";
  });

  criterion(14, "polya bridge and positivity", [](Check& o) {
    std::mt19937_64 rng(1014);
    for (int t = 0; t < 100; ++t) {
      const Poly p = draw(rng, RootMode::arbitrary, 2, 8);
      const int n = p.degree();
      for (int k = 1; k <= n - 1; ++k) {
        const Poly direct = Rational(n - k) * p.derivative(k).pow(2) -
                            Rational(n - k + 1) * p.derivative(k - 1) * p.derivative(k + 1);
        o.check(polya_gk(p, k) == direct, "G_k " + show(p));
        o.check(direct == Rational(n - k + 1) * h_kappa(p.derivative(k - 1), Rational(n - k, n - k + 1)), "bridge " + show(p));
      }
      const Poly dp = p.derivative();
      o.check(Rational(n - 1) * dp * dp - Rational(n) * p * p.derivative(2) == Rational(n) * h_kappa(p, Rational(n - 1, n)),
              "top identity " + show(p));
    }
    for (int t = 0; t < 100; ++t) {
      const Poly p = draw(rng, RootMode::p_real_simple, 2, 8);
      for (int k = 1; k <= p.degree() - 1; ++k) {
        const Poly g = polya_gk(p, k);
        o.check(z_r(g) == 0 && g(0) > 0, "G_" + std::to_string(k) + " " + show(p));
      }
    }
    o.detail << "100 identity inputs, 100 positivity inputs; ";
  });

  criterion(15, "derivative identities and rolle correspondence", [](Check& o) {
    std::mt19937_64 rng(1015);
    for (int t = 0; t < 200; ++t) {
      const Poly p = draw(rng, RootMode::arbitrary, 2, 8);
      Rational k = random_rational(rng, 6, 5);
      if (k == 0) k = Rational(1, 3);
      const IdentityCheck c = check_identities(p, k);
      o.check(c.first && c.second, show(p, k));
    }
    int applicable = 0, draws = 0;
    while (applicable < 500 && draws < 20000) {
      ++draws;
      const Poly p = draw(rng, RootMode::arbitrary, 2, 7);
      Rational k = random_rational(rng, 6, 5);
      if (k == 0) continue;
      const Rational a = random_rational(rng, 5, 4);
      const Rational b = a + Rational(random_int(rng, 1, 12), random_int(rng, 1, 4));
      const TheoremVerdict v = check_rolle_correspondence(p, k, a, b);
      if (!v.applicable) continue;
      ++applicable;
      o.check(v.outcome == Outcome::pass, show(p, k) + " on [" + to_string(a) + ", " + to_string(b) + "]");
    }
    o.check(applicable == 500, "only " + std::to_string(applicable) + " applicable triples");
    o.detail << "200 identity pairs, " << applicable << " rolle triples from " << draws << " draws; ";
  });

  criterion(16, "positivity on mirrored intervals", [](Check& o) {
    std::mt19937_64 rng(1016);
    for (int t = 0; t < 100; ++t) {
      const Poly p = draw(rng, RootMode::p_real_simple, 2, 8);
      const TheoremVerdict v = check_interval_positivity(p);
      o.check(v.outcome == Outcome::pass, show(p));
    }
    o.detail << "100 polynomials; ";
  });

  criterion(17, "lower bounds on Z_R(Q)", [](Check& o) {
    std::mt19937_64 rng(1017);
    int applicable = 0;
    int with_repeats = 0;
    for (int t = 0; t < 200; ++t) {
      const Poly p = draw(rng, RootMode::arbitrary, 2, 8);
      const int n = p.degree();
      if (!check_preconditions(p).p_real_roots_simple) ++with_repeats;
      for (const Rational& k : {Rational(2), Rational(Rational(n - 1, n) + Rational(1, 7)), Rational(1, 3), Rational(-2)}) {
        for (const auto& v : verify_counts(p, k)) {
          if (v.id != verdict_id::lower_bound_large && v.id != verdict_id::lower_bound_middle &&
              v.id != verdict_id::lower_bound_nonpositive)
            continue;
          if (!v.applicable) continue;
          ++applicable;
          if (v.outcome == Outcome::pass) continue;
          // Confirm independently before classifying as a counterexample.
          const int recount = oracle::roots_with_multiplicity(oracle_q_numerator(p, k));
          const bool confirmed = v.computed == recount && v.predicted.lo && recount < *v.predicted.lo;
          if (confirmed && oracle_has_repeated_real_root(p)) {
            o.deviation(v.id + " " + show(p, k) + ": Z_R(Q) = " + std::to_string(recount) + " < " +
                        std::to_string(*v.predicted.lo));
          } else {
            o.fail(v.id + " " + show(p, k));
          }
        }
      }
    }
    o.detail << applicable << " applicable bounds on 200 polynomials (" << with_repeats << " with a repeated real root); ";

    // Supplementary: force a repeated real root into every input.
    int forced = 0, forced_fail = 0;
    std::string example;
    for (int t = 0; t < 100; ++t) {
      Poly p = draw(rng, RootMode::arbitrary, 2, 6);
      const Rational r = random_rational(rng, 3, 2);
      p = p * Poly{-r, 1}.pow(2);
      const int n = p.degree();
      for (const Rational& k : {Rational(2), Rational(Rational(n - 1, n) + Rational(1, 7)), Rational(1, 3), Rational(-2)}) {
        for (const auto& v : verify_counts(p, k)) {
          if (v.id.rfind("lower-bound", 0) != 0 || !v.applicable) continue;
          ++forced;
          if (v.failed()) {
            ++forced_fail;
            if (example.empty()) example = v.id + " " + show(p, k);
          }
        }
      }
    }
    o.notes.push_back("inputs with a forced repeated real root: " + std::to_string(forced_fail) + " of " +
                      std::to_string(forced) + " applicable bounds fail" +
                      (example.empty() ? "" : " (e.g. " + example + ")"));
    const int known_large = whole_line_counts(P("0,0,1,0,1"), 2).z_r_q;
    o.notes.push_back("x^4 + x^2 at k = 2 has Z_R(Q) = " + std::to_string(known_large) +
                      " below the bound 1; (x - 1)^2 at k = 2 has Z_R(Q) = " +
                      std::to_string(whole_line_counts(P("1,-2,1"), 2).z_r_q) + " below the bound 1");
  });

  criterion(18, "sweep grid agrees with exact breakpoints", [](Check& o) {
    std::mt19937_64 rng(1018);
    int compared = 0, excluded = 0, polys = 0;
    while (polys < 20) {
      const Poly p = draw(rng, RootMode::arbitrary, 2, 6, 6);
      if (check_preconditions(p).perfect_power) continue;
      ++polys;
      const KappaBreakpoints bp = kappa_breakpoints_exact(p);
      const Rational step(1, 100);
      for (const auto& pt : kappa_sweep_grid(p, -2, 2, step)) {
        bool adjacent = false;
        for (const auto& b : bp.points) {
          if (compare(b, pt.kappa - step) > 0 && compare(b, pt.kappa + step) < 0) adjacent = true;
        }
        if (adjacent) {
          ++excluded;
          continue;
        }
        const KappaGap* gap = bp.gap_containing(pt.kappa);
        if (gap == nullptr) {
          o.fail("grid point on a breakpoint " + show(p, pt.kappa));
          continue;
        }
        ++compared;
        o.check(gap->counts.z_r_q == pt.counts.z_r_q && gap->counts.z_r_h == pt.counts.z_r_h, show(p, pt.kappa));
      }
    }
    o.detail << compared << " grid points compared, " << excluded << " breakpoint-adjacent excluded; ";
  });

  criterion(19, "per-interval parity", [](Check& o) {
    std::mt19937_64 rng(1019);
    int done = 0, interval_checks = 0;
    while (done < 200) {
      const Poly p = draw(rng, RootMode::arbitrary, 2, 7, 8);
      if (check_preconditions(p).perfect_power) continue;
      const Rational k = random_rational(rng, 8, 6);
      if (is_breakpoint(p, k)) continue;
      ++done;
      for (const auto& v : check_interval_parity(p, k)) {
        if (v.applicable) ++interval_checks;
        o.check(!v.failed(), v.id + " " + show(p, k) + " " + (v.notes.empty() ? "" : v.notes.front()));
      }
    }
    o.detail << "200 (p, k) pairs, " << interval_checks << " applicable verdicts; ";
  });

  std::cout << failures << " FAIL, " << deviating << " DEVIATION" << std::endl;
  return failures == 0 ? 0 : 1;
}
