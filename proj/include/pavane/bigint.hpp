#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pavane {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Parses an optionally signed decimal integer; throws InvalidArgument otherwise.
BigInt parse_bigint(std::string_view text);

// "p/q" or "p" for integral values.
std::string to_string(const Rational& value);

// Decimal rendering of value with `digits` significant digits (round half up).
std::string to_significant(const Rational& value, int digits = 6);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace pavane
