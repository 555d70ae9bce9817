#include "drawkit/rational.hpp"

#include <cctype>

namespace drawkit {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

std::optional<Integer> parse_integer(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return std::nullopt;
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto p = parse_integer(text, true);
    if (!p) return std::nullopt;
    return Rational(*p);
  }
  auto p = parse_integer(text.substr(0, slash), true);
  auto q = parse_integer(text.substr(slash + 1), false);
  if (!p || !q || *q == 0) return std::nullopt;
  return Rational(*p, *q);
}

}  // namespace drawkit
