#include "hawaii/theorems.hpp"

#include "hawaii/prs.hpp"
#include "hawaii/sweep.hpp"

namespace hawaii {
namespace {

TheoremVerdict make_verdict(const char* id, const Rational& kappa) {
  TheoremVerdict v;
  v.id = id;
  v.kappa = kappa;
  return v;
}

TheoremVerdict inapplicable(TheoremVerdict v, std::string reason) {
  v.applicable = false;
  v.reason = std::move(reason);
  v.outcome = Outcome::inapplicable;
  return v;
}

Prediction exact_prediction(Counted target, int value, std::string text) {
  return {target, value, value, std::move(text)};
}

Prediction range_prediction(Counted target, std::optional<int> lo, std::optional<int> hi, std::string text) {
  return {target, lo, hi, std::move(text)};
}

std::string interval_label(std::size_t index) { return "I" + std::to_string(index + 1); }

void settle(TheoremVerdict& v, int computed) {
  v.computed = computed;
  if (!v.applicable) return;
  if (v.assert_prediction) {
    v.outcome = v.predicted.admits(computed) ? Outcome::pass : Outcome::fail;
  } else {
    v.notes.push_back(std::string("predicted range ") + (v.predicted.admits(computed) ? "admits" : "excludes") +
                      " the computed count");
  }
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inapplicable: return "inapplicable";
    case Outcome::degenerate_range: return "degenerate_range";
    case Outcome::boundary: return "boundary";
  }
  return "inapplicable";
}

Preconditions check_preconditions(const Poly& p) {
  if (p.degree() < 2) throw std::invalid_argument("preconditions require deg p >= 2");
  Preconditions pre;
  const int n = p.degree();
  const Poly d1 = p.derivative();
  pre.degree = n;
  RootCounter pc(p);
  pre.z_r_p = pc.total(true);
  pre.distinct_real_p = pc.total(false);
  RootCounter dc(d1);
  pre.distinct_real_dp = dc.total(false);
  const Poly g = gcd(p, d1);
  pre.p_real_roots_simple = g.degree() < 1 || count_distinct_roots(g) == 0;
  pre.p_prime_real_simple = gcd(d1, d1.derivative()).degree() < 1 && pre.distinct_real_dp == n - 1;
  pre.p_real_rooted_simple = g.degree() < 1 && pre.distinct_real_p == n;
  pre.p_real_rooted = pre.z_r_p == n;
  pre.perfect_power = squarefree_part(p).degree() == 1;
  return pre;
}

std::vector<TheoremVerdict> predict(const Preconditions& pre, const Rational& kappa) {
  const int n = pre.degree;
  const Rational top(n - 1, n);
  const int z_c = n - pre.z_r_p;
  const bool simple_class = pre.p_real_roots_simple && pre.p_prime_real_simple;
  const std::string class_reason = "requires simple real roots of p and real simple roots of p'";
  std::vector<TheoremVerdict> out;

  {
    auto v = make_verdict(verdict_id::critical_simple_equality, kappa);
    if (kappa < top) {
      out.push_back(inapplicable(v, "requires k >= (n-1)/n"));
    } else if (!simple_class) {
      out.push_back(inapplicable(v, class_reason));
    } else {
      v.applicable = true;
      v.predicted = exact_prediction(Counted::h, z_c, "Z_R(H) = Z_C(p)");
      out.push_back(v);
    }
  }
  {
    auto v = make_verdict(verdict_id::nonpositive_equality, kappa);
    if (kappa > 0) {
      out.push_back(inapplicable(v, "requires k <= 0"));
    } else if (!simple_class) {
      out.push_back(inapplicable(v, class_reason));
    } else {
      v.applicable = true;
      v.predicted = exact_prediction(Counted::h, n + pre.z_r_p - 2, "Z_R(H) = n + Z_R(p) - 2");
      out.push_back(v);
    }
  }
  {
    auto v = make_verdict(verdict_id::small_kappa_sandwich, kappa);
    if (!(kappa > 0 && kappa < Rational(1, 2))) {
      out.push_back(inapplicable(v, "requires 0 < k < 1/2"));
    } else if (!simple_class) {
      out.push_back(inapplicable(v, class_reason));
    } else {
      v.applicable = true;
      v.predicted = range_prediction(Counted::h, z_c - 2, n + pre.z_r_p - 2, "Z_C(p) - 2 <= Z_R(H) <= n + Z_R(p) - 2");
      out.push_back(v);
    }
  }
  {
    auto v = make_verdict(verdict_id::real_rooted_regime, kappa);
    if (!pre.p_real_rooted_simple) {
      out.push_back(inapplicable(v, "requires p with only real simple roots"));
    } else if (kappa < Rational(1, 2) || kappa >= Rational(n, n + 1)) {
      out.push_back(inapplicable(v, "requires (k-1)/k <= kappa < k/(k+1) for some k = 2..n-1"));
    } else {
      int k = 2;
      while (!(kappa < Rational(k, k + 1))) ++k;
      v.applicable = true;
      v.predicted = range_prediction(Counted::h, 2, 2 * n - 2 * k,
                                     "2 <= Z_R(H) <= 2n - 2k with k = " + std::to_string(k));
      if (k > n - 1) {
        v.assert_prediction = false;
        v.outcome = Outcome::degenerate_range;
        v.notes.push_back("regime k = n lies outside k = 2..n-1; range reported only");
      } else if (kappa == Rational(k - 1, k)) {
        v.assert_prediction = false;
        v.outcome = Outcome::boundary;
        v.notes.push_back("kappa sits on the closed regime end (k-1)/k");
      }
      out.push_back(v);
    }
  }
  {
    const int dp = pre.distinct_real_dp;
    const int zp = pre.distinct_real_p;
    auto large = make_verdict(verdict_id::lower_bound_large, kappa);
    auto middle = make_verdict(verdict_id::lower_bound_middle, kappa);
    auto low = make_verdict(verdict_id::lower_bound_nonpositive, kappa);
    if (kappa > top) {
      large.applicable = true;
      large.predicted = range_prediction(Counted::q, dp + 1 - zp, std::nullopt, "Z_R(Q) >= #Z(p') + 1 - #Z(p)");
      out.push_back(large);
      out.push_back(inapplicable(middle, "requires 0 < k <= (n-1)/n"));
      out.push_back(inapplicable(low, "requires k <= 0"));
    } else if (kappa > 0) {
      out.push_back(inapplicable(large, "requires k > (n-1)/n"));
      middle.applicable = true;
      middle.predicted = range_prediction(Counted::q, dp - 1 - zp, std::nullopt, "Z_R(Q) >= #Z(p') - 1 - #Z(p)");
      out.push_back(middle);
      out.push_back(inapplicable(low, "requires k <= 0"));
    } else {
      out.push_back(inapplicable(large, "requires k > (n-1)/n"));
      out.push_back(inapplicable(middle, "requires 0 < k <= (n-1)/n"));
      if (pre.perfect_power) {
        out.push_back(inapplicable(low, "excluded for p = c (x - a)^n"));
      } else {
        low.applicable = true;
        low.predicted = range_prediction(Counted::q, dp - 1 + zp, std::nullopt, "Z_R(Q) >= #Z(p') - 1 + #Z(p)");
        out.push_back(low);
      }
    }
  }
  return out;
}

std::vector<TheoremVerdict> judge(std::vector<TheoremVerdict> predictions, const WholeLineCounts& counts) {
  for (auto& v : predictions) {
    if (counts.degenerate_h) {
      if (v.applicable) {
        v.applicable = false;
        v.outcome = Outcome::inapplicable;
        v.reason = "H vanishes identically";
      }
      continue;
    }
    settle(v, v.predicted.target == Counted::h ? counts.z_r_h : counts.z_r_q);
  }
  return predictions;
}

std::vector<TheoremVerdict> verify_counts(const Poly& p, const Rational& kappa) {
  return judge(predict(check_preconditions(p), kappa), whole_line_counts(p, kappa));
}

TheoremVerdict check_laguerre(const Poly& p) {
  auto v = make_verdict(verdict_id::laguerre, 1);
  const Preconditions pre = check_preconditions(p);
  if (!pre.p_real_rooted_simple) return inapplicable(v, "requires p with only real simple roots");
  v.applicable = true;
  v.predicted = exact_prediction(Counted::h, 0, "Z_R(H_1) = 0 and H_1 > 0");
  const Poly h = h_kappa(p, 1);
  settle(v, count_roots_with_multiplicity(h));
  if (h(0) <= 0) {
    v.outcome = Outcome::fail;
    v.notes.push_back("H_1(0) = " + to_string(h(0)) + " is not positive");
  }
  return v;
}

TheoremVerdict check_hawaii(const Poly& p) {
  auto v = make_verdict(verdict_id::hawaii, 1);
  const Preconditions pre = check_preconditions(p);
  if (!pre.p_real_roots_simple) return inapplicable(v, "requires simple real roots of p");
  v.applicable = true;
  v.predicted = range_prediction(Counted::h, std::nullopt, pre.degree - pre.z_r_p, "Z_R(H_1) <= Z_C(p)");
  settle(v, count_roots_with_multiplicity(h_kappa(p, 1)));
  return v;
}

Poly h_of_derivative(const Poly& p, const Rational& kappa) {
  if (kappa == 0) throw std::invalid_argument("2 - 1/k requires k != 0");
  const Rational c = 2 - 1 / kappa;
  const Poly d2 = p.derivative(2);
  return c * (d2 * d2) - p.derivative() * p.derivative(3);
}

IdentityCheck check_identities(const Poly& p, const Rational& kappa) {
  const Poly h = h_kappa(p, kappa);
  const Poly dh = h.derivative();
  const Poly g = h_of_derivative(p, kappa);
  const Poly d1 = p.derivative();
  const Poly d2 = p.derivative(2);
  const Poly d3 = p.derivative(3);
  IdentityCheck out;
  out.first = (dh * d1 - g * p - ((2 * kappa - 1) / kappa) * (h * d2)).is_zero();
  out.second = (dh * d2 - kappa * (g * d1) - h * d3).is_zero();
  return out;
}

TheoremVerdict check_rolle_correspondence(const Poly& p, const Rational& kappa, const Rational& a, const Rational& b) {
  auto v = make_verdict(verdict_id::rolle, kappa);
  if (kappa == 0) return inapplicable(v, "requires k != 0");
  if (!(a < b)) return inapplicable(v, "requires a < b");
  if (p.degree() < 2) return inapplicable(v, "requires deg p >= 2");
  const IntervalSpec closed = IntervalSpec::closed(a, b);
  const Poly d1 = p.derivative();
  const Poly d2 = p.derivative(2);
  auto free_of_zeros = [&](const Poly& f) { return !f.is_zero() && count_distinct_roots(f, closed) == 0; };
  const bool case_one = free_of_zeros(p) && free_of_zeros(d1);
  const bool case_two = free_of_zeros(d1) && free_of_zeros(d2);
  if (!case_one && !case_two) return inapplicable(v, "requires p, p' or p', p'' free of zeros on [a, b]");
  const Poly h = h_kappa(p, kappa);
  const Poly g = h_of_derivative(p, kappa);
  if (h.is_zero() || g.is_zero()) return inapplicable(v, "H_k[p] or H_{2-1/k}[p'] vanishes identically");
  const IntervalSpec open = IntervalSpec::open(a, b);
  const int rhs = count_roots_with_multiplicity(g, open);
  v.applicable = true;
  v.predicted = range_prediction(Counted::h, std::nullopt, rhs + 1, "Z_(a,b)(H_k[p]) <= Z_(a,b)(H_{2-1/k}[p']) + 1");
  settle(v, count_roots_with_multiplicity(h, open));
  const IdentityCheck ids = check_identities(p, kappa);
  if (!ids.first || !ids.second) {
    v.outcome = Outcome::fail;
    v.notes.push_back("identity check failed");
  }
  return v;
}

TheoremVerdict check_interval_positivity(const Poly& p) {
  auto v = make_verdict(verdict_id::interval_positivity, 0);
  const Preconditions pre = check_preconditions(p);
  if (!pre.p_real_rooted_simple) return inapplicable(v, "requires p with only real simple roots");
  v.applicable = true;
  v.predicted = exact_prediction(Counted::h, 0, "H_c has no zero on I_s and I_{n-s+1}, c = (n-s)/(n-s+1)");
  const int n = pre.degree;
  const IntervalPartition part = interval_partition(p);
  int zeros = 0;
  bool positive = true;
  for (int s = 2; s <= (n + 1) / 2; ++s) {
    const Rational c(n - s, n - s + 1);
    RootCounter hc(h_kappa(p, c));
    const Poly h = hc.poly();
    for (std::size_t idx : {static_cast<std::size_t>(s - 1), static_cast<std::size_t>(n - s)}) {
      const auto& iv = part.intervals.at(idx);
      const int z = hc.count_between(iv.left, iv.right);
      zeros += z;
      const Rational sample = rational_between(*iv.left, *iv.right);
      const bool pos = h(sample) > 0;
      positive = positive && pos;
      v.notes.push_back("s=" + std::to_string(s) + " " + interval_label(idx) + ": zeros " + std::to_string(z) +
                        ", H_c(" + to_string(sample) + ") " + (pos ? "> 0" : "<= 0"));
    }
  }
  if (n < 3) v.notes.push_back("no s in 2..floor((n+1)/2)");
  settle(v, zeros);
  if (!positive) v.outcome = Outcome::fail;
  return v;
}

TheoremVerdict check_shapiro_criterion(const Poly& p) {
  const int n = p.degree();
  auto v = make_verdict(verdict_id::shapiro_criterion, Rational(n - 1, n));
  if (n < 4 || n % 2 != 0) return inapplicable(v, "requires even degree n >= 4");
  int found = 0;
  for (int k = 1; k <= n - 2; ++k) {
    if (count_roots_with_multiplicity(p.derivative(k)) == n - k) {
      found = k;
      break;
    }
  }
  const Poly h = h_kappa(p, Rational(n - 1, n));
  const int zp = count_roots_with_multiplicity(p);
  if (h.is_zero()) return inapplicable(v, "H vanishes identically");
  const int sum = count_roots_with_multiplicity(h) + zp;
  if (found == 0) {
    v = inapplicable(v, "criterion not triggered: no p^(k), k = 1..n-2, is real-rooted");
    v.computed = sum;
    v.notes.push_back("Z_R(H) + Z_R(p) = " + std::to_string(sum));
    return v;
  }
  v.applicable = true;
  v.notes.push_back("p^(" + std::to_string(found) + ") is real-rooted");
  v.predicted = range_prediction(Counted::h, 1, std::nullopt, "Z_R(H_{(n-1)/n}) + Z_R(p) > 0");
  settle(v, sum);
  return v;
}

std::optional<int> expected_parity(const PartitionInterval& iv, int degree, const Rational& kappa, bool has_poles) {
  if (!has_poles) return std::nullopt;
  const Rational top(degree - 1, degree);
  const bool first = iv.kind == IntervalKind::first;
  if (!iv.is_infinite()) return first ? 0 : 1;
  if (kappa == top) return std::nullopt;
  if (first) return kappa >= top ? 0 : 1;
  return kappa > top ? 1 : 0;
}

std::vector<TheoremVerdict> check_interval_parity(const Poly& p, const Rational& kappa) {
  return check_interval_parity(per_interval_counts(p, kappa));
}

std::vector<TheoremVerdict> check_interval_parity(const CountReport& report) {
  auto parity = make_verdict(verdict_id::parity, report.kappa);
  auto nonpos = make_verdict(verdict_id::first_type_nonpositive, report.kappa);
  if (report.degenerate_h) {
    return {inapplicable(parity, "H vanishes identically"), inapplicable(nonpos, "H vanishes identically")};
  }
  const bool has_poles = !report.partition.poles.empty();
  int mismatches = 0;
  int checked = 0;
  int short_first = 0;
  int finite_first = 0;
  for (std::size_t i = 0; i < report.partition.intervals.size(); ++i) {
    const auto& iv = report.partition.intervals[i];
    const int count = report.per_interval[i].count_q;
    if (auto want = expected_parity(iv, report.n, report.kappa, has_poles)) {
      ++checked;
      const bool ok = count % 2 == *want;
      if (!ok) ++mismatches;
      parity.notes.push_back(interval_label(i) + " " + to_string(iv.kind) + (iv.is_infinite() ? " infinite" : " finite") +
                             ": " + std::to_string(count) + (*want ? " expected odd" : " expected even") +
                             (ok ? "" : " MISMATCH"));
    } else if (has_poles && iv.is_infinite()) {
      parity.notes.push_back(interval_label(i) + " infinite at k = (n-1)/n: " + std::to_string(count) +
                             " zeros, parity not asserted");
    }
    if (!iv.is_infinite() && iv.kind == IntervalKind::first) {
      ++finite_first;
      if (count < 2) ++short_first;
    }
  }
  std::vector<TheoremVerdict> out;
  if (checked == 0) {
    out.push_back(inapplicable(parity, "p' has no real root"));
  } else {
    parity.applicable = true;
    parity.predicted = exact_prediction(Counted::q, 0, "intervals with the wrong parity");
    settle(parity, mismatches);
    out.push_back(parity);
  }
  if (report.kappa > 0) {
    out.push_back(inapplicable(nonpos, "requires k <= 0"));
  } else if (finite_first == 0) {
    out.push_back(inapplicable(nonpos, "no finite first-type interval"));
  } else {
    nonpos.applicable = true;
    nonpos.predicted = exact_prediction(Counted::q, 0, "finite first-type intervals with fewer than two zeros");
    settle(nonpos, short_first);
    out.push_back(nonpos);
  }
  return out;
}

TheoremVerdict check_finite_interval_counts(const Poly& p, const Rational& kappa) {
  auto v = make_verdict(verdict_id::finite_interval_counts, kappa);
  const Preconditions pre = check_preconditions(p);
  if (!pre.p_real_rooted_simple) return inapplicable(v, "requires p with only real simple roots");
  const int n = pre.degree;
  if (kappa < 0 || kappa >= Rational(n - 1, n)) return inapplicable(v, "requires 0 <= k < (n-1)/n");
  int j = 1;
  while (!(kappa < Rational(j, j + 1))) ++j;
  const bool wide = j >= n / 2 + 1;
  if (!wide && j > (n - 1) / 2) return inapplicable(v, "no statement for j = n/2");
  const IntervalPartition part = interval_partition(p);
  RootCounter hc(h_kappa(p, kappa));
  int violations = 0;
  for (int k = 2; k <= n - 1; ++k) {
    const auto& iv = part.intervals.at(static_cast<std::size_t>(k - 1));
    const int z = hc.count_between(iv.left, iv.right);
    const bool must_vanish = wide && k >= n - j + 1 && k <= j;
    const bool ok = must_vanish ? z == 0 : (z == 0 || z == 2);
    if (!ok) ++violations;
    v.notes.push_back(interval_label(static_cast<std::size_t>(k - 1)) + ": " + std::to_string(z) +
                      (must_vanish ? " (expected 0)" : " (expected 0 or 2)"));
  }
  v.applicable = true;
  v.predicted = exact_prediction(Counted::h, 0, "finite intervals violating the count rule for j = " + std::to_string(j));
  settle(v, violations);
  return v;
}

}  // namespace hawaii
