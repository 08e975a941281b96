#include "hawaii/generators.hpp"

#include "hawaii/prs.hpp"
#include "hawaii/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace hawaii {
namespace {

std::vector<Rational> distinct_rationals(std::mt19937_64& rng, int count, long bound) {
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational r = random_rational(rng, bound);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

Rational nonzero_leading(std::mt19937_64& rng) {
  long c = 0;
  while (c == 0) c = random_int(rng, -3, 3);
  return c;
}

Poly draw(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  const int n = static_cast<int>(random_int(rng, cfg.min_degree, cfg.max_degree));
  const long bound = cfg.coeff_bound;
  switch (cfg.mode) {
    case RootMode::arbitrary: {
      std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
      for (auto& x : c) x = random_int(rng, -bound, bound);
      while (c.back() == 0) c.back() = random_int(rng, -bound, bound);
      return Poly(std::move(c));
    }
    case RootMode::p_real_simple: {
      auto roots = distinct_rationals(rng, n, std::max(bound / 2, static_cast<long>(n)));
      return Poly::from_roots(roots, nonzero_leading(rng));
    }
    case RootMode::dp_real_simple:
    case RootMode::both: {
      auto crit = distinct_rationals(rng, n - 1, std::max(bound / 2, static_cast<long>(n)));
      Poly f = Poly::from_roots(crit, nonzero_leading(rng)).integral();
      if (cfg.mode == RootMode::dp_real_simple) return f + Poly::constant(random_int(rng, -bound, bound));
      Rational reach = 1;
      for (const auto& r : crit) reach = std::max(reach, Rational(abs(f(r)) + 1));
      const Rational scale = Rational(floor(reach) + 1);
      Rational step(random_int(rng, -8, 8), 8);
      step.canonicalize();
      const Rational c = scale * step;
      return f + Poly::constant(c);
    }
  }
  throw std::invalid_argument("unknown root mode");
}

}  // namespace

std::string to_string(RootMode mode) {
  switch (mode) {
    case RootMode::arbitrary: return "arbitrary";
    case RootMode::p_real_simple: return "p-real-simple";
    case RootMode::dp_real_simple: return "dp-real-simple";
    case RootMode::both: return "both";
  }
  return "arbitrary";
}

std::optional<RootMode> parse_root_mode(std::string_view text) {
  if (text == "arbitrary") return RootMode::arbitrary;
  if (text == "p-real-simple") return RootMode::p_real_simple;
  if (text == "dp-real-simple" || text == "p'-real-simple") return RootMode::dp_real_simple;
  if (text == "both") return RootMode::both;
  return std::nullopt;
}

long random_int(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng);
}

Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
  Rational r(random_int(rng, -bound, bound), random_int(rng, 1, max_den));
  r.canonicalize();
  return r;
}

bool satisfies_mode(const Poly& p, RootMode mode) {
  if (p.degree() < 2) return false;
  if (mode == RootMode::arbitrary) return true;
  const Preconditions pre = check_preconditions(p);
  switch (mode) {
    case RootMode::arbitrary: return true;
    case RootMode::p_real_simple: return pre.p_real_rooted_simple;
    case RootMode::dp_real_simple: return pre.p_prime_real_simple;
    case RootMode::both: return pre.p_prime_real_simple && pre.p_real_roots_simple;
  }
  return false;
}

Poly generate_polynomial(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  if (cfg.min_degree < 2 || cfg.max_degree < cfg.min_degree) throw std::invalid_argument("invalid degree range");
  if (cfg.coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Poly p = draw(cfg, rng);
    if (satisfies_mode(p, cfg.mode)) return p;
  }
  throw std::runtime_error("generator could not satisfy the requested root mode");
}

}  // namespace hawaii
