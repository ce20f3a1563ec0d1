#include "pavane/series.hpp"

#include "pavane/errors.hpp"

namespace pavane {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const BigInt> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_integers(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (auto v : coeffs) c.emplace_back(v);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

TruncatedSeries TruncatedSeries::with_order(int order) const {
  TruncatedSeries s(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n) s[n] = coeffs_[static_cast<std::size_t>(n)];
  return s;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw InvalidArgument("series orders differ (" + std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                          ")");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] += b[n];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] -= b[n];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] = -r[n];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int order = a.order();
  TruncatedSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (int n = 0; n <= a.order(); ++n) r[n] *= c;
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  if (b[0] == 0) throw InvalidArgument("series division by a series with zero constant term");
  const int order = a.order();
  TruncatedSeries q(order);
  for (int n = 0; n <= order; ++n) {
    Rational acc = a[n];
    for (int j = 1; j <= n; ++j) acc -= b[j] * q[n - j];
    q[n] = acc / b[0];
  }
  return q;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_same_order(outer, inner);
  if (inner[0] != 0) throw InvalidArgument("compose: inner series must have zero constant term");
  const int order = outer.order();
  TruncatedSeries acc(order);
  for (int n = order; n >= 0; --n) {
    acc = acc * inner;
    acc[0] += outer[n];
  }
  return acc;
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (a[0] != 1) throw InvalidArgument("sqrt requires constant term 1");
  const int order = a.order();
  TruncatedSeries s(order);
  s[0] = 1;
  // a_n = sum_{j=0}^{n} s_j s_{n-j} = 2 s_n + sum_{j=1}^{n-1} s_j s_{n-j}
  for (int n = 1; n <= order; ++n) {
    Rational acc = a[n];
    for (int j = 1; j < n; ++j) acc -= s[j] * s[n - j];
    s[n] = acc / 2;
  }
  return s;
}

TruncatedSeries gf_A44(int order) {
  if (order < 0) throw InvalidArgument("order must be nonnegative");
  // One extra order absorbs the factor z cancelled from numerator and denominator.
  const int work = order + 1;
  TruncatedSeries discriminant(work);
  discriminant[0] = 1;
  if (work >= 1) discriminant[1] = -6;
  if (work >= 2) discriminant[2] = 5;

  TruncatedSeries numerator = TruncatedSeries::constant(1, work) + TruncatedSeries::variable(work) - sqrt(discriminant);
  if (numerator[0] != 0) throw InternalError("gf_A44: numerator has nonzero constant term");

  // numerator / z and 2(2z - z^2) / z = 4 - 2z
  TruncatedSeries reduced(order);
  for (int n = 0; n <= order; ++n) reduced[n] = numerator[n + 1];
  TruncatedSeries denominator(order);
  denominator[0] = 4;
  if (order >= 1) denominator[1] = -2;

  auto result = reduced / denominator;
  for (const auto& c : result.coeffs())
    if (boost::multiprecision::denominator(c) != 1 || c < 0)
      throw InternalError("gf_A44: coefficient " + to_string(c) + " is not a nonnegative integer");
  return result;
}

std::vector<BigInt> binomial_transform(std::span<const BigInt> a) {
  std::vector<BigInt> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    BigInt c = 1;  // C(n, k)
    for (std::size_t k = 0; k <= n; ++k) {
      b[n] += c * a[k];
      c = c * (n - k) / (k + 1);
    }
  }
  return b;
}

std::vector<Rational> binomial_transform(std::span<const Rational> a) {
  std::vector<Rational> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    BigInt c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      b[n] += Rational(c) * a[k];
      c = c * (n - k) / (k + 1);
    }
  }
  return b;
}

TruncatedSeries binomial_transform_series(const TruncatedSeries& a) {
  const int order = a.order();
  // z/(1-z) and 1/(1-z)
  TruncatedSeries geometric(order);
  for (int n = 0; n <= order; ++n) geometric[n] = 1;
  TruncatedSeries inner = TruncatedSeries::variable(order) * geometric;
  return geometric * compose(a, inner);
}

}  // namespace pavane
