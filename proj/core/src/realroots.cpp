#include "hawaii/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hawaii {
namespace {

int sign_of_leading_at_infinity(const Dense<Integer>& p, int side) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (side < 0 && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

Dense<Integer> primitive_keep_sign(Dense<Integer> p) {
  Integer content = 0;
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
  return p;
}

/// Picks a point strictly inside (a, b) where f does not vanish, preferring
/// the midpoint. Candidates stay dyadic when a and b are.
Rational split_point(const Poly& f, const Rational& a, const Rational& b) {
  Rational s = midpoint(a, b);
  Rational step = (b - a) / 4;
  while (f(s) == 0) {
    s = midpoint(a, b) + step;
    step /= 2;
  }
  return s;
}

void isolate_factor(const Poly& f, const SturmChain& chain, const Rational& a, const Rational& b, int va, int vb,
                    int multiplicity, RootList& out) {
  const int count = va - vb;
  if (count == 0) return;
  if (count == 1) {
    out.push_back({f, a, b, multiplicity});
    return;
  }
  Rational s = split_point(f, a, b);
  int vs = chain.variations_at(s);
  isolate_factor(f, chain, a, s, va, vs, multiplicity, out);
  isolate_factor(f, chain, s, b, vs, vb, multiplicity, out);
}

bool has_root_inside(const Poly& g, const Rational& lo, const Rational& hi) {
  // g has at most one simple root in (lo, hi) and does not vanish at the ends.
  return sign(g(lo)) * sign(g(hi)) < 0;
}

}  // namespace

bool IntervalSpec::contains(const Rational& x) const {
  if (lo) {
    if (x < *lo || (x == *lo && !lo_closed)) return false;
  }
  if (hi) {
    if (x > *hi || (x == *hi && !hi_closed)) return false;
  }
  return true;
}

int sign_at_rational(const Dense<Integer>& p, const Rational& x) {
  if (p.empty()) return 0;
  // sum c_i u^i v^(d-i) with x = u/v, v > 0
  const Integer& u = x.get_num();
  const Integer& v = x.get_den();
  Integer acc = 0;
  Integer vpow = 1;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * u + *it * vpow;
    vpow *= v;
  }
  return sgn(acc);
}

SturmChain::SturmChain(const Poly& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(to_integer_primitive(squarefree));
  if (squarefree.degree() == 0) return;
  chain_.push_back(to_integer_primitive(squarefree.derivative()));
  while (chain_.back().size() > 1) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    const int delta = prs_detail::degree(a) - prs_detail::degree(b);
    Dense<Integer> rem = prs_detail::pseudo_remainder(a, b);
    if (rem.empty()) break;
    // -rem(a, b) up to a positive factor
    const bool flip = !(sgn(b.back()) < 0 && delta % 2 == 0);
    if (flip) {
      for (auto& c : rem) c = -c;
    }
    chain_.push_back(primitive_keep_sign(std::move(rem)));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at_rational(p, x));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(int side) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_of_leading_at_infinity(p, side));
  return count_variations(signs);
}

int SturmChain::count_half_open(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  if (lo && hi && *lo >= *hi) return 0;
  const int vlo = lo ? variations_at(*lo) : variations_at_infinity(-1);
  const int vhi = hi ? variations_at(*hi) : variations_at_infinity(+1);
  return vlo - vhi;
}

std::vector<Poly> SturmChain::polys() const {
  std::vector<Poly> out;
  out.reserve(chain_.size());
  for (const auto& p : chain_) out.push_back(from_integer(p));
  return out;
}

std::vector<Poly> sturm_chain(const Poly& p) { return SturmChain(squarefree_part(p)).polys(); }

AlgebraicNumber AlgebraicNumber::exact(const Rational& value, int multiplicity) {
  return {Poly({-value, 1}), value, value, multiplicity};
}

Rational cauchy_bound(const Poly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p.coeff(i) / p.leading()));
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational power = 1;
  while (power <= bound) power *= 2;
  return power;
}

RootList isolate_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  RootList roots;
  for (const auto& part : squarefree_decomposition(p).factors) {
    SturmChain chain(part.factor);
    Rational b = cauchy_bound(part.factor);
    Rational a = -b;
    isolate_factor(part.factor, chain, a, b, chain.variations_at(a), chain.variations_at(b), part.multiplicity, roots);
  }
  std::sort(roots.begin(), roots.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; });
  // make neighbouring isolating intervals disjoint
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (roots[i].hi > roots[i + 1].lo) {
      roots[i] = bisect(roots[i]);
      roots[i + 1] = bisect(roots[i + 1]);
    }
  }
  return roots;
}

AlgebraicNumber bisect(const AlgebraicNumber& a) {
  if (a.is_exact()) return a;
  Rational m = midpoint(a.lo, a.hi);
  Rational v = a.defining(m);
  if (v == 0) return AlgebraicNumber::exact(m, a.multiplicity);
  AlgebraicNumber out = a;
  if (sign(v) == sign(a.defining(a.lo))) {
    out.lo = m;
  } else {
    out.hi = m;
  }
  return out;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  AlgebraicNumber out = a;
  while (!out.is_exact() && out.width() >= width) out = bisect(out);
  return out;
}

AlgebraicNumber snap_rational(const AlgebraicNumber& a) {
  if (a.is_exact()) return a;
  const Rational q = simplest_between(a.lo, a.hi);
  if (a.defining(q) == 0) return AlgebraicNumber::exact(q, a.multiplicity);
  return a;
}

AlgebraicNumber refine_and_snap(const AlgebraicNumber& a, const Rational& width) {
  return snap_rational(refine(a, width));
}

int sign_at(const Poly& q, const AlgebraicNumber& a) {
  if (q.is_zero()) return 0;
  if (a.is_exact()) return sign(q(a.lo));
  if (q.degree() == 0) return sign(q.leading());
  Poly g = gcd(a.defining, q);
  if (g.degree() >= 1 && has_root_inside(g, a.lo, a.hi)) return 0;
  Poly sq = squarefree_part(q);
  SturmChain chain(sq);
  AlgebraicNumber cur = a;
  while (true) {
    if (cur.is_exact()) return sign(q(cur.lo));
    const int inside = chain.count_half_open(cur.lo, cur.hi) + (sq(cur.lo) == 0 ? 1 : 0);
    if (inside == 0) return sign(q(cur.lo));
    cur = bisect(cur);
  }
}

int compare(const AlgebraicNumber& a, const Rational& b) {
  AlgebraicNumber cur = a;
  while (true) {
    if (cur.is_exact()) return cur.lo < b ? -1 : (cur.lo > b ? 1 : 0);
    if (b <= cur.lo) return 1;
    if (b >= cur.hi) return -1;
    if (cur.defining(b) == 0) return 0;
    cur = bisect(cur);
  }
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_exact()) return -compare(b, a.lo);
  if (b.is_exact()) return compare(a, b.lo);
  if (a.hi <= b.lo) return -1;
  if (b.hi <= a.lo) return 1;
  Poly g = gcd(a.defining, b.defining);
  if (g.degree() >= 1) {
    const Rational lo = a.lo > b.lo ? a.lo : b.lo;
    const Rational hi = a.hi < b.hi ? a.hi : b.hi;
    if (has_root_inside(g, lo, hi)) return 0;
  }
  AlgebraicNumber x = a;
  AlgebraicNumber y = b;
  while (true) {
    if (x.is_exact() || y.is_exact()) return compare(x, y);
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    x = bisect(x);
    y = bisect(y);
  }
}

RootCounter::RootCounter(const Poly& p) : poly_(p) {
  if (p.is_zero()) throw std::invalid_argument("cannot count roots of the zero polynomial");
  for (auto& f : squarefree_decomposition(p).factors) {
    SturmChain chain(f.factor);
    parts_.push_back({std::move(f.factor), f.multiplicity, std::move(chain)});
  }
}

int RootCounter::count_open(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                            bool with_multiplicity) const {
  if (lo && hi && *lo >= *hi) return 0;
  int total = 0;
  for (const auto& part : parts_) {
    int c = part.chain.count_half_open(lo, hi);
    if (hi && part.factor(*hi) == 0) --c;
    total += with_multiplicity ? c * part.multiplicity : c;
  }
  return total;
}

int RootCounter::count(const IntervalSpec& iv, bool with_multiplicity) const {
  auto at = [&](const Rational& x) {
    for (const auto& part : parts_) {
      if (part.factor(x) == 0) return with_multiplicity ? part.multiplicity : 1;
    }
    return 0;
  };
  if (iv.lo && iv.hi) {
    if (*iv.lo > *iv.hi) return 0;
    if (*iv.lo == *iv.hi) return (iv.lo_closed && iv.hi_closed) ? at(*iv.lo) : 0;
  }
  int total = count_open(iv.lo, iv.hi, with_multiplicity);
  if (iv.lo && iv.lo_closed) total += at(*iv.lo);
  if (iv.hi && iv.hi_closed) total += at(*iv.hi);
  return total;
}

int RootCounter::multiplicity_at(const AlgebraicNumber& a) const {
  for (const auto& part : parts_) {
    if (sign_at(part.factor, a) == 0) return part.multiplicity;
  }
  return 0;
}

AlgebraicNumber RootCounter::separate(AlgebraicNumber a) const {
  if (a.is_exact()) return a;
  std::vector<bool> vanishes;
  vanishes.reserve(parts_.size());
  for (const auto& part : parts_) vanishes.push_back(sign_at(part.factor, a) == 0);
  while (!a.is_exact()) {
    bool clean = true;
    for (std::size_t i = 0; i < parts_.size() && clean; ++i) {
      const auto& part = parts_[i];
      if (part.factor(a.lo) == 0 || part.factor(a.hi) == 0) {
        clean = false;
        break;
      }
      const int inside = part.chain.count_half_open(a.lo, a.hi) - (vanishes[i] ? 1 : 0);
      if (inside != 0) clean = false;
    }
    if (clean) return a;
    a = bisect(a);
  }
  return a;
}

int RootCounter::count_between(const std::optional<AlgebraicNumber>& lo, const std::optional<AlgebraicNumber>& hi,
                               bool with_multiplicity) const {
  if (lo && hi && compare(*lo, *hi) >= 0) return 0;
  std::optional<AlgebraicNumber> a = lo;
  std::optional<AlgebraicNumber> b = hi;
  while (true) {
    std::optional<Rational> left;
    std::optional<Rational> right;
    if (a) {
      a = separate(*a);
      left = a->is_exact() ? a->lo : a->hi;
    }
    if (b) {
      b = separate(*b);
      right = b->lo;
    }
    if (!left || !right || *left < *right) return count_open(left, right, with_multiplicity);
    a = bisect(*a);
    b = bisect(*b);
  }
}

int count_distinct_roots(const Poly& p, const IntervalSpec& iv) { return RootCounter(p).count(iv, false); }

int count_roots_with_multiplicity(const Poly& p, const IntervalSpec& iv) { return RootCounter(p).count(iv, true); }

}  // namespace hawaii
