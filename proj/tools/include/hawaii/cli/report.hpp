#pragma once

// JSON renderings of core results. Rationals are strings "n/d" (or "n"), and
// algebraic numbers carry their isolating interval and defining polynomial.

#include "hawaii/families.hpp"
#include "hawaii/partition.hpp"
#include "hawaii/sweep.hpp"
#include "hawaii/theorems.hpp"
#include "hawaii/trials.hpp"

#include "json.hpp"

namespace hawaii::cli {

using Json = nlohmann::ordered_json;

/// Exact decimal expansion of r truncated toward zero to `digits` places.
std::string decimal(const Rational& r, int digits = 10);

Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const AlgebraicNumber& a);
Json to_json(const std::optional<AlgebraicNumber>& a, const char* infinity);
Json to_json(const WholeLineCounts& c);
Json to_json(const CountReport& report);
Json to_json(const Preconditions& pre);
Json to_json(const TheoremVerdict& v);
Json to_json(const std::vector<SweepPoint>& grid);
Json to_json(const KappaBreakpoints& bp);
Json to_json(const TrialReport& report);
Json to_json(const FamilyInstance& family);

}  // namespace hawaii::cli
