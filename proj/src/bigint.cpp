#include "pavane/bigint.hpp"

#include <cctype>

#include "pavane/errors.hpp"

namespace pavane {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::string to_significant(const Rational& value, int digits) {
  if (digits < 1) throw InvalidArgument("digits must be positive");
  if (value == 0) return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');

  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  // decade = floor(log10(num/den))
  int decade = 0;
  while (num >= den * pow10(decade + 1)) ++decade;
  while (num * pow10(-decade) < den) --decade;

  // scaled = round(value * 10^(digits-1-decade)), digits digits long
  const int shift = digits - 1 - decade;
  auto scaled_at = [&](int s) {
    BigInt n = num, d = den;
    if (s >= 0) n *= pow10(s); else d *= pow10(-s);
    BigInt q = n / d;
    if ((n % d) * 2 >= d) ++q;
    return q;
  };
  BigInt scaled = scaled_at(shift);
  if (scaled >= pow10(digits)) {
    ++decade;
    scaled = scaled_at(shift - 1);
  }

  std::string mantissa = scaled.str();
  std::string out;
  if (decade >= 0 && decade < digits) {
    out = mantissa.substr(0, static_cast<std::size_t>(decade + 1));
    if (decade + 1 < digits) out += "." + mantissa.substr(static_cast<std::size_t>(decade + 1));
  } else if (decade < 0 && decade >= -4) {
    out = "0." + std::string(static_cast<std::size_t>(-decade - 1), '0') + mantissa;
  } else {
    out = mantissa.substr(0, 1);
    if (digits > 1) out += "." + mantissa.substr(1);
    out += (decade < 0 ? "e-" : "e+");
    const int mag = decade < 0 ? -decade : decade;
    if (mag < 10) out += "0";
    out += std::to_string(mag);
  }
  return negative ? "-" + out : out;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace pavane
