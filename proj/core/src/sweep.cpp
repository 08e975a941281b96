#include "hawaii/sweep.hpp"

#include "hawaii/prs.hpp"

#include <algorithm>

namespace hawaii {
namespace {

Dense<Poly> pencil_coefficients(const KappaPencil& pencil) {
  const int top = std::max(pencil.a.degree(), pencil.b.degree());
  Dense<Poly> out(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) out[static_cast<std::size_t>(j)] = Poly({-pencil.b.coeff(j), pencil.a.coeff(j)});
  prs_detail::trim(out);
  return out;
}

}  // namespace

Poly breakpoint_polynomial(const Poly& p) {
  KappaPencil pencil = kappa_pencil(p);
  Dense<Poly> h = pencil_coefficients(pencil);
  if (h.size() <= 1) throw BreakpointError("H_k[p] is a fixed polynomial times a function of k; no finite breakpoint set");
  Poly disc = parametric_resultant(h, parametric_derivative(h));
  if (disc.is_zero()) throw BreakpointError("Res_x(H_k, H_k') vanishes identically in k");
  return disc * h.back();
}

std::vector<SweepPoint> kappa_sweep_grid(const Poly& p, const Rational& lo, const Rational& hi, const Rational& step,
                                         bool dodge) {
  if (!(lo < hi)) throw std::invalid_argument("sweep range requires lo < hi");
  if (step <= 0) throw std::invalid_argument("sweep step must be positive");
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("sweep requires deg p >= 2");
  std::optional<Poly> bp;
  try {
    bp = breakpoint_polynomial(p);
  } catch (const BreakpointError&) {
    bp.reset();
  }
  const Rational drop(n - 1, n);
  std::vector<SweepPoint> out;
  for (Rational k = lo; k <= hi; k += step) {
    SweepPoint pt;
    pt.kappa = k;
    pt.evaluated_at = k;
    pt.degree_drop = (k == drop);
    pt.breakpoint = pt.degree_drop || (bp && (*bp)(k) == 0);
    if (dodge && pt.breakpoint) pt.evaluated_at = k + step / 997;
    pt.counts = whole_line_counts(p, pt.evaluated_at);
    out.push_back(std::move(pt));
  }
  return out;
}

Rational rational_between(AlgebraicNumber a, AlgebraicNumber b) {
  while (a.hi >= b.lo) {
    a = bisect(a);
    b = bisect(b);
  }
  return midpoint(a.hi, b.lo);
}

const KappaGap* KappaBreakpoints::gap_containing(const Rational& kappa) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int c = compare(points[i], kappa);
    if (c == 0) return nullptr;
    if (c > 0) return &gaps[i];
  }
  return &gaps.back();
}

KappaBreakpoints kappa_breakpoints_exact(const Poly& p) {
  if (p.degree() < 2) throw std::invalid_argument("breakpoints require deg p >= 2");
  KappaBreakpoints out;
  out.points = isolate_roots(breakpoint_polynomial(p));
  for (auto& pt : out.points) pt = refine_and_snap(pt, Rational(1, 1 << 20));
  for (const auto& pt : out.points) {
    if (pt.is_exact()) {
      out.at_points.push_back(whole_line_counts(p, pt.lo));
    } else {
      out.at_points.emplace_back(std::nullopt);
    }
  }
  const std::size_t m = out.points.size();
  for (std::size_t i = 0; i <= m; ++i) {
    KappaGap gap;
    if (i > 0) gap.lo = out.points[i - 1];
    if (i < m) gap.hi = out.points[i];
    if (gap.lo && gap.hi) {
      gap.sample = rational_between(*gap.lo, *gap.hi);
    } else if (gap.lo) {
      gap.sample = floor(gap.lo->hi) + 1;
    } else if (gap.hi) {
      gap.sample = Rational(floor(gap.hi->lo) - 1);
    } else {
      gap.sample = 0;
    }
    gap.counts = whole_line_counts(p, gap.sample);
    out.gaps.push_back(std::move(gap));
  }
  return out;
}

ThresholdEnclosure infinite_interval_threshold(const Poly& p, const Rational& width, InfiniteSide side) {
  if (width <= 0) throw std::invalid_argument("threshold width must be positive");
  const int n = p.degree();
  IntervalPartition part = interval_partition(p);
  if (part.poles.empty()) throw std::invalid_argument("p' has no real root; there is no infinite half-interval");
  const PartitionInterval& iv = side == InfiniteSide::left ? part.intervals.front() : part.intervals.back();
  if (iv.kind == IntervalKind::first) throw std::invalid_argument("the infinite interval is of the first type");

  KappaPencil pencil = kappa_pencil(p);
  auto count = [&](const Rational& k) { return RootCounter(pencil.at(k)).count_between(iv.left, iv.right); };

  ThresholdEnclosure enc{Rational(1, 2), Rational(n - 1, n)};
  if (count(enc.lo) != 0 || count(enc.hi) == 0) {
    throw std::runtime_error("threshold is not bracketed by [1/2, (n-1)/n]");
  }
  while (enc.hi - enc.lo > width) {
    Rational mid = midpoint(enc.lo, enc.hi);
    if (count(mid) > 0) {
      enc.hi = mid;
    } else {
      enc.lo = mid;
    }
  }
  return enc;
}

}  // namespace hawaii
