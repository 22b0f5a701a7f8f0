#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace modlat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Parses a nonnegative decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

}  // namespace modlat
