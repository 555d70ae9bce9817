#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace drawkit {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Always "p/q" with q > 0, lowest terms.
std::string to_fraction(const Rational& r);

// Accepts "p" or "p/q" with optional sign; rejects decimals and zero denominators.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace drawkit
