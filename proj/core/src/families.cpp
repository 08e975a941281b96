#include "hawaii/families.hpp"

#include "hawaii/hkappa.hpp"
#include "hawaii/polytext.hpp"
#include "hawaii/prs.hpp"
#include "hawaii/realroots.hpp"

#include <algorithm>

namespace hawaii {
namespace {

Claim claim(std::string description, bool holds, std::string detail, bool asserted = true) {
  return {std::move(description), holds, asserted, std::move(detail)};
}

Claim identity_claim(std::string description, const Poly& lhs, const Poly& rhs, bool asserted = true) {
  const Poly diff = lhs - rhs;
  return claim(std::move(description), diff.is_zero(),
               diff.is_zero() ? "difference is the zero polynomial" : "difference " + format_poly(diff), asserted);
}

Claim count_claim(std::string description, int computed, int expected, bool asserted = true) {
  return claim(std::move(description), computed == expected,
               "computed " + std::to_string(computed) + ", expected " + std::to_string(expected), asserted);
}

int z_r(const Poly& p) { return count_roots_with_multiplicity(p); }
int z_c(const Poly& p) { return p.degree() - z_r(p); }

}  // namespace

bool FamilyInstance::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return !c.asserted || c.holds; });
}

FamilyInstance family_shapiro1_deg4(const Rational& a) {
  if (a == 0 || a == 1 || a == -1) throw FamilyError("shapiro1-deg4 requires a not in {-1, 0, 1}");
  const Rational a2 = a * a;
  FamilyInstance out;
  out.name = "shapiro1-deg4";
  out.params = {{"a", a}};
  out.p = Poly{a2, 0, 1} * Poly{a2, 1} * Poly{-1, 1};
  const Rational k(3, 4);
  const Poly h = h_kappa(out.p, k);
  const Poly f1{Rational(-a * (a + 1)), Rational(a - 1)};
  const Poly f2{Rational(a * (a - 1)), Rational(a + 1)};
  out.claims.push_back(identity_claim("(4/3) H_{3/4} = [(a-1)x - a(a+1)]^2 [(a+1)x + a(a-1)]^2",
                                      Rational(4, 3) * h, f1.pow(2) * f2.pow(2)));
  out.claims.push_back(count_claim("Z_R(H_{3/4}) = 4", z_r(h), 4));
  out.claims.push_back(count_claim("Z_C(p) = 2", z_c(out.p), 2));
  return out;
}

FamilyInstance family_binomial_sym(int n) {
  if (n < 2) throw FamilyError("binomial-sym requires n >= 2");
  FamilyInstance out;
  out.name = "binomial-sym";
  out.params = {{"n", n}};
  out.p = Poly{-1, 1}.pow(n) + Poly{1, 1}.pow(n);
  const bool asserted = n >= 5;
  const Poly h = h_kappa(out.p, Rational(n - 1, n));
  const Poly expected = Rational(-4 * n * (n - 1)) * Poly{-1, 0, 1}.pow(n - 2);
  const int zr = z_r(h);
  const int zc = z_c(out.p);
  out.claims.push_back(
      identity_claim("H_{(n-1)/n} = -4n(n-1)(x-1)^(n-2)(x+1)^(n-2)", h, expected, asserted));
  out.claims.push_back(count_claim("Z_R(H_{(n-1)/n}) = 2n-4", zr, 2 * n - 4, asserted));
  out.claims.push_back(count_claim("Z_C(p) = 2 floor(n/2)", zc, 2 * (n / 2), asserted));
  out.claims.push_back(claim("Z_R(H_{(n-1)/n}) > Z_C(p)", zr > zc,
                             std::to_string(zr) + " vs " + std::to_string(zc), asserted));
  return out;
}

FamilyInstance family_monomial_gap(int n, const Rational& a) {
  if (n < 3) throw FamilyError("monomial-gap requires n >= 3");
  if (a <= 0) throw FamilyError("monomial-gap requires a > 0");
  FamilyInstance out;
  out.name = "monomial-gap";
  out.params = {{"n", n}, {"a", a}};
  out.p = Poly::monomial(1, n) + Poly::monomial(a, n - 2);
  const Rational lo(n - 1, n);
  Rational hi((2 * n - 3) * (2 * n - 3), 4 * n * (n - 2));
  hi.canonicalize();
  const Rational mid = midpoint(lo, hi);
  auto q_count = [&](const Rational& k) { return z_r(q_reduced(out.p, k).q_num); };
  out.claims.push_back(count_claim("Z_R(Q_k) = 4 at the midpoint k = " + to_string(mid), q_count(mid), 4));
  const int at_lo = q_count(lo);
  const int at_hi = q_count(hi);
  out.claims.push_back(claim("Z_R(Q_k) at the left end k = " + to_string(lo), at_lo == 4,
                             "computed " + std::to_string(at_lo), false));
  out.claims.push_back(claim("Z_R(Q_k) at the right end k = " + to_string(hi), at_hi == 4,
                             "computed " + std::to_string(at_hi), false));
  return out;
}

FamilyInstance family_shapiro2(int n) {
  if (n < 2) throw FamilyError("shapiro2 requires n >= 2");
  FamilyInstance out;
  out.name = "shapiro2";
  out.params = {{"n", n}};
  out.p = Poly::monomial(Rational(1, 2 * n), 2 * n) + Poly{1, 0, Rational(1, 2)};
  const Poly h = h_kappa(out.p, Rational(2 * n - 1, 2 * n));
  const Poly rhs = Poly::monomial(2 * n * n - 5 * n + 3, 2 * n) + Poly::monomial(2 * n * (2 * n - 1), 2 * n - 2) +
                   Poly::monomial(-(n - 1), 2) + Poly::constant(2 * n);
  out.claims.push_back(identity_claim("-2n H_{(2n-1)/(2n)} = (2n^2-5n+3)x^(2n) + 2n(2n-1)x^(2n-2) - (n-1)x^2 + 2n",
                                      Rational(-2 * n) * h, rhs));
  out.claims.push_back(count_claim("Z_R(H_{(2n-1)/(2n)}) = 0", z_r(h), 0));
  out.claims.push_back(count_claim("Z_R(p) = 0", z_r(out.p), 0));
  return out;
}

Poly chebyshev_t(int n) {
  if (n < 0) throw FamilyError("chebyshev requires n >= 0");
  Poly prev = Poly::constant(1);
  if (n == 0) return prev;
  Poly cur = Poly::x();
  const Poly two_x{0, 2};
  for (int k = 1; k < n; ++k) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

FamilyInstance chebyshev_instance(int n) {
  FamilyInstance out;
  out.name = "chebyshev";
  out.params = {{"n", n}};
  out.p = chebyshev_t(n);
  if (n >= 1) {
    out.claims.push_back(claim("leading coefficient 2^(n-1)", out.p.leading() == rational_pow(2, n - 1),
                               "computed " + to_string(out.p.leading())));
  }
  out.claims.push_back(count_claim("n simple real roots in (-1, 1)",
                                   count_distinct_roots(out.p, IntervalSpec::open(-1, 1)), n));
  if (n >= 2 && n % 2 == 0) {
    const int m = n / 2;
    const auto [quot, rem] = (out.p - Poly::constant(1)).divmod(Poly{-1, 0, 1});
    const Poly core = squarefree_part(quot);
    const bool square = rem.is_zero() && core.degree() == m - 1 && (core.monic().pow(2) * quot.leading() == quot);
    out.claims.push_back(claim("T_n - 1 = 2^(n-1)(x^2-1) s(x)^2 with s of degree n/2-1", square,
                               square ? "factorization verified" : "factorization differs"));
    out.claims.push_back(count_claim("s has n/2-1 distinct real roots", count_distinct_roots(core), m - 1));
  }
  return out;
}

}  // namespace

FamilyInstance section16_example() {
  FamilyInstance out;
  out.name = "section16";
  out.p = Poly{0, 0, 1} * Poly{-1, 1} * Poly{-2, 1} * Poly{10, 1} + Poly::constant(Rational(1, 10));
  const Poly dp = out.p.derivative();
  out.claims.push_back(identity_claim("p' = 5x^4 + 28x^3 - 84x^2 + 40x", dp, Poly{0, 40, -84, 28, 5}));
  const RootList crit = isolate_roots(dp);
  out.claims.push_back(count_claim("p' has 4 real roots", static_cast<int>(crit.size()), 4));
  if (crit.size() == 4) {
    const Rational approx[4] = {Rational(-7865, 1000), Rational(0), Rational(617, 1000), Rational(1648, 1000)};
    const Rational window(1, 1000);
    bool bracketed = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
      const AlgebraicNumber r = refine(crit[static_cast<std::size_t>(i)], Rational(1, 100000));
      const bool inside = r.lo > approx[i] - window && r.hi < approx[i] + window;
      bracketed = bracketed && inside;
      if (i) detail += ", ";
      detail += "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
    }
    out.claims.push_back(claim("critical points within 0.001 of -7.865, 0, 0.617, 1.648", bracketed, detail));
    const RootCounter counter(q_reduced(out.p, Rational(2, 3)).q_num);
    out.claims.push_back(
        count_claim("Q_{2/3} has 3 zeros in (xi_1, 0)", counter.count_between(crit[0], AlgebraicNumber::exact(0)), 3));
  }
  auto window_claim = [&](const Rational& x, const Rational& lo, const Rational& hi) {
    const Rational m = m_eval(out.p, x);
    out.claims.push_back(claim("M(" + to_string(x) + ") in (" + to_string(lo) + ", " + to_string(hi) + ")",
                               m > lo && m < hi, "M = " + to_string(m) + " ~ " + std::to_string(to_double(m))));
  };
  window_claim(Rational(-11, 40), Rational(641, 1000), Rational(643, 1000));
  window_claim(Rational(-27, 20), Rational(683, 1000), Rational(685, 1000));
  return out;
}

namespace {

FamilyInstance chebyshev_search_instance(int n, const Rational& eps) {
  const ChebyshevSearchResult r = theorem7_search(n, eps);
  FamilyInstance out;
  out.name = "chebyshev-sharpness";
  out.params = {{"n", n}, {"eps", eps}, {"b", r.b}};
  out.p = r.p;
  for (const auto& [k, count] : r.verification) {
    out.claims.push_back(count_claim("Z_R(Q_k) = 4n-2 at k = " + to_string(k), count, r.expected));
    const int recount = count_roots_with_multiplicity(q_reduced(r.p, k).q_num);
    out.claims.push_back(count_claim("independent recount at k = " + to_string(k), recount, r.expected));
  }
  return out;
}

FamilyInstance inductive_instance(int n, const Rational& eps) {
  const InductiveBuildResult r = theorem10_build(n, eps);
  FamilyInstance out;
  out.name = "inductive-builder";
  out.params = {{"n", n}, {"eps", eps}};
  out.p = r.p;
  const bool simple = squarefree_part(r.p).degree() == n;
  out.claims.push_back(count_claim("p has n distinct real roots", simple ? count_distinct_roots(r.p) : -1, n));
  const RootList crit = isolate_roots(r.p.derivative());
  for (const auto& w : r.witnesses) {
    const Rational m = m_eval(r.p, w.y);
    out.claims.push_back(claim("M(y) > " + to_string(w.bound) + " at y = " + to_string(w.y), m > w.bound,
                               "M = " + to_string(m)));
    int below = 0;
    for (const auto& c : crit) below += compare(c, w.y) < 0 ? 1 : 0;
    out.claims.push_back(count_claim("y lies in I_" + std::to_string(w.interval), below + 1, w.interval));
  }
  return out;
}

int integer_param(const std::map<std::string, Rational>& params, const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const Rational& v = it->second;
  if (v.get_den() != 1 || v < -1000 || v > 1000) throw FamilyError("parameter " + key + " must be a small integer");
  return static_cast<int>(v.get_num().get_si());
}

Rational rational_param(const std::map<std::string, Rational>& params, const std::string& key, Rational fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"shapiro1-deg4", "binomial-sym",        "monomial-gap",     "shapiro2",
          "chebyshev",     "chebyshev-sharpness", "inductive-builder", "section16"};
}

std::vector<std::string> family_parameters(const std::string& name) {
  if (name == "shapiro1-deg4") return {"a"};
  if (name == "binomial-sym" || name == "shapiro2" || name == "chebyshev") return {"n"};
  if (name == "monomial-gap") return {"n", "a"};
  if (name == "chebyshev-sharpness" || name == "inductive-builder") return {"n", "eps"};
  if (name == "section16") return {};
  throw FamilyError("unknown family '" + name + "'");
}

FamilyInstance make_family(const std::string& name, const std::map<std::string, Rational>& params) {
  const auto allowed = family_parameters(name);
  for (const auto& [key, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw FamilyError("family " + name + " does not take parameter '" + key + "'");
    }
  }
  if (name == "shapiro1-deg4") return family_shapiro1_deg4(rational_param(params, "a", 2));
  if (name == "binomial-sym") return family_binomial_sym(integer_param(params, "n", 5));
  if (name == "monomial-gap") return family_monomial_gap(integer_param(params, "n", 4), rational_param(params, "a", 1));
  if (name == "shapiro2") return family_shapiro2(integer_param(params, "n", 2));
  if (name == "chebyshev") return chebyshev_instance(integer_param(params, "n", 4));
  if (name == "chebyshev-sharpness") {
    return chebyshev_search_instance(integer_param(params, "n", 2), rational_param(params, "eps", Rational(1, 10)));
  }
  if (name == "inductive-builder") {
    return inductive_instance(integer_param(params, "n", 4), rational_param(params, "eps", Rational(1, 10)));
  }
  return section16_example();
}

}  // namespace hawaii
