#include "hawaii/partition.hpp"

namespace hawaii {
namespace {

EndTag tag_from(int value) { return value < 0 ? EndTag::right : EndTag::wrong; }

}  // namespace

std::string to_string(IntervalKind kind) { return kind == IntervalKind::first ? "first" : "second"; }

std::string to_string(EndTag tag) {
  switch (tag) {
    case EndTag::right: return "right";
    case EndTag::wrong: return "wrong";
    case EndTag::none: return "none";
  }
  return "none";
}

IntervalPartition interval_partition(const Poly& p) {
  if (p.degree() < 2) throw std::invalid_argument("interval partition requires deg p >= 2");
  IntervalPartition out;
  out.degree = p.degree();
  const Poly d1 = p.derivative();
  for (const auto& xi : isolate_roots(d1)) {
    const int sp = sign_at(p, xi);
    if (sp == 0) continue;
    PoleTags tags;
    tags.s = 1 + xi.multiplicity;
    tags.sigma = sp * sign_at(p.derivative(tags.s), xi);
    tags.right_side = tag_from(tags.sigma);
    tags.left_side = tag_from(tags.s % 2 == 0 ? tags.sigma : -tags.sigma);
    out.poles.push_back(xi);
    out.pole_tags.push_back(tags);
  }

  RootCounter roots(p);
  const std::size_t m = out.poles.size() + 1;
  for (std::size_t k = 0; k < m; ++k) {
    PartitionInterval iv;
    if (k > 0) {
      iv.left = out.poles[k - 1];
      iv.left_end = out.pole_tags[k - 1].right_side;
    }
    if (k + 1 < m) {
      iv.right = out.poles[k];
      iv.right_end = out.pole_tags[k].left_side;
    }
    iv.roots_of_p = roots.count_between(iv.left, iv.right, false);
    iv.kind = iv.roots_of_p > 0 ? IntervalKind::first : IntervalKind::second;
    out.intervals.push_back(std::move(iv));
  }
  return out;
}

CountReport per_interval_counts(const Poly& p, const Rational& kappa) {
  return per_interval_counts(p, kappa, interval_partition(p));
}

CountReport per_interval_counts(const Poly& p, const Rational& kappa, const IntervalPartition& partition) {
  CountReport report;
  report.kappa = kappa;
  report.n = p.degree();
  report.partition = partition;
  report.z_r_p = count_roots_with_multiplicity(p);
  report.z_c_p = report.n - report.z_r_p;
  report.hq = q_reduced(p, kappa);
  if (report.hq.degenerate) {
    report.degenerate_h = true;
    return report;
  }

  RootCounter hc(report.hq.h);
  RootCounter qc(report.hq.q_num);
  report.z_r_h = hc.total();
  report.z_r_q = qc.total();
  int sum_h = 0;
  int sum_q = 0;
  for (std::size_t k = 0; k < partition.intervals.size(); ++k) {
    const auto& iv = partition.intervals[k];
    IntervalCount c;
    c.index = k;
    c.count_h = hc.count_between(iv.left, iv.right);
    c.count_q = qc.count_between(iv.left, iv.right);
    sum_h += c.count_h;
    sum_q += c.count_q;
    report.per_interval.push_back(c);
  }
  for (const auto& xi : partition.poles) {
    report.at_poles_h += hc.multiplicity_at(xi);
    report.at_poles_q += qc.multiplicity_at(xi);
  }
  report.consistent = (sum_h + report.at_poles_h == report.z_r_h) && (sum_q + report.at_poles_q == report.z_r_q);
  return report;
}

WholeLineCounts whole_line_counts(const Poly& p, const Rational& kappa) {
  WholeLineCounts out;
  HQPair hq = q_reduced(p, kappa);
  if (hq.degenerate) {
    out.degenerate_h = true;
    return out;
  }
  out.z_r_h = count_roots_with_multiplicity(hq.h);
  out.z_r_q = count_roots_with_multiplicity(hq.q_num);
  return out;
}

}  // namespace hawaii
