#pragma once

// Seeded random polynomial generators. Every generated polynomial is checked
// by exact computation against the requested root structure and resampled
// until it qualifies.

#include "hawaii/poly.hpp"

#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace hawaii {

enum class RootMode {
  arbitrary,       // random integer coefficients
  p_real_simple,   // n distinct real rational roots
  dp_real_simple,  // p' has n-1 distinct real roots
  both,            // p' as above and every real root of p simple
};

std::string to_string(RootMode mode);
/// Accepts arbitrary, p-real-simple, dp-real-simple (or p'-real-simple), both.
std::optional<RootMode> parse_root_mode(std::string_view text);

struct GeneratorConfig {
  int min_degree = 2;
  int max_degree = 8;
  int coeff_bound = 10;
  RootMode mode = RootMode::arbitrary;
};

/// Exact membership test for a mode.
bool satisfies_mode(const Poly& p, RootMode mode);

/// Draws from rng until the result satisfies cfg.mode (at most 1000 draws,
/// then std::runtime_error).
Poly generate_polynomial(const GeneratorConfig& cfg, std::mt19937_64& rng);

/// Uniform integer in [lo, hi].
long random_int(std::mt19937_64& rng, long lo, long hi);

/// Random rational with numerator in [-bound, bound] and denominator in 1..max_den.
Rational random_rational(std::mt19937_64& rng, long bound, long max_den = 3);

}  // namespace hawaii
