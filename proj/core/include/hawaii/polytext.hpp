#pragma once

#include "hawaii/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hawaii {

/// Raised by the text parsers; `position` is the 0-based character offset of
/// the offending token in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts either `c0,c1,...,cn` (lowest degree first, each `n` or `n/d`) or
/// `roots:r1,r2,...;lc:c`. The `;lc:` part is optional and defaults to 1.
Poly parse_poly(std::string_view text);

/// Inverse of the coefficient form of parse_poly. The zero polynomial prints as `0`.
std::string format_poly(const Poly& p);

/// Human-oriented rendering, e.g. `x^2 - 1`.
std::string pretty_poly(const Poly& p, std::string_view var = "x");

/// Comma separated rationals, used for --kappa lists.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace hawaii
