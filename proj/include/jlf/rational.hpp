#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace jlf {

/// Exact rational number used for every exponent, center and coordinate.
using Rational = boost::rational<std::int64_t>;

/// Parses "p", "-p", "+p" or "p/q" (q > 0). Throws Error{malformed_rational}.
Rational parse_rational(std::string_view text);

/// "3", "-1/2", "0". Never prints a denominator of 1.
std::string format_rational(const Rational& value);

std::string format_rationals(const std::vector<Rational>& values);

inline bool is_integer(const Rational& value) { return value.denominator() == 1; }

}  // namespace jlf
