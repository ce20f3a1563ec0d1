#pragma once

#include <span>
#include <vector>

#include "pavane/bigint.hpp"

namespace pavane {

// Power series truncated at z^order (order + 1 exact rational coefficients).
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries from_integers(std::span<const BigInt> coeffs);
  static TruncatedSeries from_integers(std::initializer_list<long long> coeffs);
  static TruncatedSeries constant(const Rational& c, int order);
  // z at the given order (order >= 1), or 0 when order == 0.
  static TruncatedSeries variable(int order);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  [[nodiscard]] bool is_zero() const;
  // Copy truncated (or zero-padded) to another order.
  [[nodiscard]] TruncatedSeries with_order(int order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

// Operands must share the same order (InvalidArgument otherwise).
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
// b[0] must be nonzero.
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

// a(inner(z)) by Horner's scheme; inner[0] must be zero.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// s with s*s = a and s[0] = 1; requires a[0] = 1.
TruncatedSeries sqrt(const TruncatedSeries& a);

// Coefficients of (1 + z - sqrt(1 - 6z + 5z^2)) / (2(2z - z^2)) up to z^order.
TruncatedSeries gf_A44(int order);

// b_n = sum_k C(n,k) a_k.
std::vector<BigInt> binomial_transform(std::span<const BigInt> a);
std::vector<Rational> binomial_transform(std::span<const Rational> a);

// (1/(1-z)) * a(z/(1-z)) at the order of a.
TruncatedSeries binomial_transform_series(const TruncatedSeries& a);

}  // namespace pavane
