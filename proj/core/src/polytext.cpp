#include "hawaii/polytext.hpp"

#include <sstream>

namespace hawaii {
namespace {

std::vector<Rational> parse_list_at(std::string_view text, std::size_t base) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    // tolerate surrounding blanks
    std::size_t lead = token.find_first_not_of(" \t");
    std::size_t trail = token.find_last_not_of(" \t");
    if (lead == std::string_view::npos) throw ParseError("empty coefficient", base + start);
    token = token.substr(lead, trail - lead + 1);
    try {
      out.push_back(parse_rational(token));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational '" + std::string(token) + "'", base + start + lead);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) { return parse_list_at(text, 0); }

Poly parse_poly(std::string_view text) {
  constexpr std::string_view kRoots = "roots:";
  constexpr std::string_view kLead = "lc:";
  if (text.empty()) throw ParseError("empty polynomial", 0);
  if (text.substr(0, kRoots.size()) == kRoots) {
    std::size_t semi = text.find(';');
    std::string_view roots_part = text.substr(kRoots.size(), semi == std::string_view::npos ? std::string_view::npos : semi - kRoots.size());
    std::vector<Rational> roots;
    if (!roots_part.empty()) roots = parse_list_at(roots_part, kRoots.size());
    Rational leading = 1;
    if (semi != std::string_view::npos) {
      std::string_view rest = text.substr(semi + 1);
      if (rest.substr(0, kLead.size()) != kLead) throw ParseError("expected 'lc:'", semi + 1);
      auto values = parse_list_at(rest.substr(kLead.size()), semi + 1 + kLead.size());
      if (values.size() != 1) throw ParseError("lc takes one value", semi + 1 + kLead.size());
      leading = values.front();
      if (leading == 0) throw ParseError("leading coefficient must be nonzero", semi + 1 + kLead.size());
    }
    return Poly::from_roots(roots, leading);
  }
  return Poly(parse_list_at(text, 0));
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) out += ',';
    out += to_string(p.coeff(i));
  }
  return out;
}

std::string pretty_poly(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && i > 0;
    if (!unit) {
      bool frac = mag.get_den() != 1 && i > 0;
      if (frac) os << '(';
      os << to_string(mag);
      if (frac) os << ')';
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace hawaii
