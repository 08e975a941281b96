#pragma once

#include "hawaii/poly.hpp"
#include "hawaii/polytext.hpp"
#include "hawaii/rational.hpp"
#include "oracles/oracle.hpp"

#include <string_view>

namespace testsupport {

inline hawaii::Rational R(std::string_view text) { return hawaii::parse_rational(text); }
inline hawaii::Poly P(std::string_view text) { return hawaii::parse_poly(text); }

inline oracle::P to_oracle(const hawaii::Poly& p) { return oracle::P(p.coeffs().begin(), p.coeffs().end()); }
inline hawaii::Poly from_oracle(const oracle::P& p) { return hawaii::Poly(std::vector<hawaii::Rational>(p.begin(), p.end())); }

}  // namespace testsupport
