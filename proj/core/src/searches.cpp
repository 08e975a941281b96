#include "hawaii/families.hpp"

#include "hawaii/hkappa.hpp"
#include "hawaii/partition.hpp"
#include "hawaii/realroots.hpp"

#include <algorithm>

namespace hawaii {
namespace {

Rational dyadic(int j) { return Rational(1) / rational_pow(2, static_cast<unsigned>(j)); }

void check_eps(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) throw FamilyError("eps must satisfy 0 < eps < 1/2");
}

// M[p] > c on [lo, hi]: p' has no zero there and c (p')^2 - p p'' < 0 throughout.
bool m_above_on(const Poly& p, const Rational& lo, const Rational& hi, const Rational& c) {
  const IntervalSpec iv = IntervalSpec::closed(lo, hi);
  if (count_distinct_roots(p.derivative(), iv) != 0) return false;
  const Poly h = h_kappa(p, c);
  if (h.is_zero()) return false;
  return count_distinct_roots(h, iv) == 0 && sign(h(midpoint(lo, hi))) < 0;
}

Poly build(int zero_multiplicity, const std::vector<Rational>& others) {
  return Poly::monomial(1, zero_multiplicity) * Poly::from_roots(others);
}

struct Carried {
  Rational lo;
  Rational hi;
  Rational target;
  int interval;
};

}  // namespace

ChebyshevSearchResult theorem7_search(int n, const Rational& eps) {
  if (n < 1) throw FamilyError("chebyshev-sharpness requires n >= 1");
  check_eps(eps);
  const Poly base = chebyshev_t(2 * n) - Poly::constant(1);
  const std::vector<Rational> kappas = {Rational(1, 10), Rational(1, 4), Rational(1, 2) - eps};
  ChebyshevSearchResult out;
  out.n = n;
  out.expected = 4 * n - 2;
  for (int j = 2; j <= 40; ++j) {
    const Rational b = dyadic(j);
    const Poly p = base + Poly::constant(b);
    std::vector<std::pair<Rational, int>> table;
    bool ok = true;
    for (const auto& k : kappas) {
      const int count = whole_line_counts(p, k).z_r_q;
      table.emplace_back(k, count);
      ok = ok && count == out.expected;
    }
    if (ok) {
      out.b = b;
      out.p = p;
      out.verification = std::move(table);
      return out;
    }
  }
  throw SearchError("no dyadic b >= 2^-40 gives 4n-2 zeros at every sampled k", 0);
}

InductiveBuildResult theorem10_build(int n, const Rational& eps) {
  if (n < 3) throw FamilyError("inductive-builder requires n >= 3");
  check_eps(eps);
  std::vector<Rational> placed = {Rational(1)};
  std::vector<Carried> carried;
  Poly p = build(n - 1, placed);
  Rational prev_delta = 2;
  int delta_exp = 0;
  for (int step = 1; step <= n - 2; ++step) {
    const int m = n - step;
    const Rational target(m - 1, m);
    const Rational local = target - eps / n;

    bool found = false;
    Rational delta;
    for (int j = delta_exp + 1; j <= delta_exp + 60 && !found; ++j) {
      delta = dyadic(j);
      if (delta >= prev_delta / 2) continue;
      if (count_distinct_roots(p.derivative(), IntervalSpec{Rational(0), delta / 2, false, true}) != 0) continue;
      if (m_above_on(p, delta / 4, delta / 2, local)) {
        found = true;
        delta_exp = j;
      }
    }
    if (!found) throw SearchError("no check interval found near the multiple root", step);
    carried.push_back({delta / 4, delta / 2, target, m});

    found = false;
    for (int j = delta_exp + 3; j <= delta_exp + 120 && !found; ++j) {
      std::vector<Rational> trial = placed;
      trial.push_back(dyadic(j));
      const Poly q = build(m - 1, trial);
      const bool ok = std::all_of(carried.begin(), carried.end(),
                                  [&](const Carried& c) { return m_above_on(q, c.lo, c.hi, c.target - eps); });
      if (ok) {
        placed = std::move(trial);
        p = q;
        found = true;
      }
    }
    if (!found) throw SearchError("no split point keeps every carried interval above its target", step);
    prev_delta = delta;
  }

  InductiveBuildResult out;
  out.n = n;
  out.p = p;
  out.roots = placed;
  out.roots.push_back(0);
  std::sort(out.roots.begin(), out.roots.end());
  const RootList crit = isolate_roots(p.derivative());
  for (const auto& c : carried) {
    InductiveWitness w;
    w.interval = c.interval;
    w.lo = c.lo;
    w.hi = c.hi;
    w.y = midpoint(c.lo, c.hi);
    w.bound = c.target - eps;
    w.m_at_y = m_eval(p, w.y);
    int below = 0;
    for (const auto& r : crit) below += compare(r, w.y) < 0 ? 1 : 0;
    if (below + 1 != w.interval || !(w.m_at_y > w.bound)) {
      throw SearchError("witness for I_" + std::to_string(w.interval) + " failed the final check", n - 1);
    }
    out.witnesses.push_back(std::move(w));
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const InductiveWitness& a, const InductiveWitness& b) { return a.interval < b.interval; });
  return out;
}

}  // namespace hawaii
