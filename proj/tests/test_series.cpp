#include <doctest.h>

#include <random>

#include "pavane/enumerate.hpp"
#include "pavane/errors.hpp"
#include "pavane/series.hpp"

using namespace pavane;

namespace {

TruncatedSeries S(std::initializer_list<long long> c) { return TruncatedSeries::from_integers(c); }

// Newton iteration s <- (s + a/s)/2 from s = 1; doubles the correct prefix each round.
TruncatedSeries newton_sqrt(const TruncatedSeries& a) {
  auto s = TruncatedSeries::constant(1, a.order());
  for (int round = 0; (1 << round) <= 2 * (a.order() + 1); ++round) s = Rational(1, 2) * (s + a / s);
  return s;
}

// a_n from (2z - z^2)F^2 - (1 + z)F + 1 = 0, coefficient by coefficient.
std::vector<BigInt> a44_by_recurrence(int order) {
  std::vector<BigInt> a{1};
  auto square_coeff = [&](int m) {
    BigInt s = 0;
    for (int j = 0; j <= m; ++j) s += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(m - j)];
    return s;
  };
  for (int n = 1; n <= order; ++n) {
    BigInt v = 2 * square_coeff(n - 1) - a[static_cast<std::size_t>(n - 1)];
    if (n >= 2) v -= square_coeff(n - 2);
    a.push_back(v);
  }
  return a;
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = Rational(num(rng), den(rng));
  if (unit_constant) s[0] = 1;
  while (s[0] == 0) s[0] = Rational(num(rng), den(rng));
  return s;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(S({1, 1, 1, 1}) * S({1, -1, 0, 0}) == S({1, 0, 0, 0}));
  const auto a = S({3, 1, 4, 1, 5});
  CHECK(a / a == S({1, 0, 0, 0, 0}));
  CHECK(S({1, 1}) * S({1, 1}) == S({1, 2}));
  CHECK(S({1, 2}) + S({3, 4}) == S({4, 6}));
  CHECK(S({1, 2}) - S({3, 4}) == S({-2, -2}));
  CHECK_THROWS_AS(S({1, 2}) / S({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(S({1, 2}) + S({1, 2, 3}), InvalidArgument);
}

TEST_CASE("coefficients stay in lowest terms") {
  const auto q = S({1, 0}) / S({3, 1});
  CHECK(q[0] == Rational(1, 3));
  CHECK(q[1] == Rational(-1, 9));
  CHECK(boost::multiprecision::denominator(q[1]) == 9);
}

TEST_CASE("sqrt") {
  const auto s = sqrt(S({1, -6, 5, 0}));
  CHECK(s == S({1, -3, -2, -6}));
  CHECK(s == newton_sqrt(S({1, -6, 5, 0})));
  CHECK(sqrt(S({1, 0, 0, 0})) == S({1, 0, 0, 0}));
  CHECK_THROWS_AS(sqrt(S({4, 1})), InvalidArgument);
}

TEST_CASE("sqrt matches Newton iteration on random series") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_series(rng, 12, true);
    CHECK(sqrt(a) == newton_sqrt(a));
  }
}

TEST_CASE("compose") {
  const auto z = TruncatedSeries::variable(5);
  const auto inner = z / S({1, -1, 0, 0, 0, 0});
  CHECK(inner == S({0, 1, 1, 1, 1, 1}));
  CHECK(compose(z, inner) == inner);
  CHECK(compose(S({1, 1, 1, 1, 1, 1}), z) == S({1, 1, 1, 1, 1, 1}));
  // 1/(1-z) composed with 2z is 1/(1-2z)
  CHECK(compose(S({1, 1, 1, 1, 1, 1}), S({0, 2, 0, 0, 0, 0})) == S({1, 2, 4, 8, 16, 32}));
  CHECK_THROWS_AS(compose(z, S({1, 1, 0, 0, 0, 0})), InvalidArgument);
}

TEST_CASE("gf_A44") {
  CHECK(gf_A44(0) == S({1}));
  CHECK(gf_A44(5) == S({1, 1, 2, 6, 21, 79}));
  CHECK(gf_A44(6)[6] == 311);
  const auto rec = a44_by_recurrence(30);
  const auto gf = gf_A44(30);
  for (int n = 0; n <= 30; ++n) REQUIRE(gf[n] == Rational(rec[static_cast<std::size_t>(n)]));
}

TEST_CASE("gf_A44 equals enumeration for n <= 10") {
  const auto counts = count_sequence(build_pattern_set(PatternFamily::A, 4), 10).terms;
  CHECK(TruncatedSeries::from_integers(counts) == gf_A44(10));
}

TEST_CASE("binomial transform") {
  CHECK(binomial_transform(std::vector<BigInt>(8, 1)) == std::vector<BigInt>{1, 2, 4, 8, 16, 32, 64, 128});
  std::vector<BigInt> delta(6, 0);
  delta[0] = 1;
  CHECK(binomial_transform(delta) == std::vector<BigInt>(6, 1));

  const std::vector<BigInt> f{1, 1, 2, 6, 23, 103, 513};
  std::vector<BigInt> direct;
  for (unsigned n = 0; n < f.size(); ++n) {
    BigInt b = 0;
    for (unsigned k = 0; k <= n; ++k) b += binomial(n, k) * f[k];
    direct.push_back(b);
  }
  CHECK(binomial_transform(f) == direct);
  CHECK(direct[5] == 1 + 5 + 20 + 60 + 115 + 103);
}

TEST_CASE("binomial transform generating-function identity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigInt> a;
    for (int n = 0; n <= 15; ++n) a.emplace_back(dist(rng));
    const auto b = binomial_transform(a);
    CHECK(binomial_transform_series(TruncatedSeries::from_integers(a)) == TruncatedSeries::from_integers(b));
  }
}
