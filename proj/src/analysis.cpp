#include "pavane/analysis.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "pavane/bijections.hpp"
#include "pavane/containment.hpp"
#include "pavane/count_cache.hpp"
#include "pavane/errors.hpp"

namespace pavane {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

// Decimal -> 6 significant digits via an exact rational at 40 fractional digits.
std::string significant(const Decimal& value) {
  const BigInt scale = boost::multiprecision::pow(BigInt(10), 40);
  const Decimal scaled = boost::multiprecision::round(value * Decimal(scale));
  auto digits = scaled.str(0, std::ios_base::fixed);
  digits = digits.substr(0, digits.find('.'));
  return to_significant(Rational(BigInt(digits), scale));
}

Decimal to_decimal_value(const BigInt& v) { return Decimal(v.str()); }

std::vector<BigInt> a_family_counts(int k, int max_n, const AnalysisContext& ctx) {
  return count_sequence(build_pattern_set(PatternFamily::A, k), max_n, ctx.cache, ctx.enumeration).terms;
}

Permutation swapped_monotone(int l) {
  std::vector<int> e(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  std::swap(e[0], e[1]);
  return Permutation(std::move(e));
}

// (position, value, co-rank) for entries of co-rank <= limit.
std::vector<std::array<int, 3>> low_corank_entries(const Permutation& p, int limit) {
  const auto c = corank_vector(p);
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < p.size(); ++i)
    if (c.values[static_cast<std::size_t>(i)] <= limit) out.push_back({i + 1, p[static_cast<std::size_t>(i)], c.values[static_cast<std::size_t>(i)]});
  return out;
}

template <class Map, class Inverse, class Statistic>
BijectionRow check_bijection_at(int n, const PatternSet& domain_class, const PatternSet& codomain_class, Map map,
                                Inverse inverse, Statistic statistic_ok, const EnumerationOptions& options) {
  BijectionRow row{n};
  const auto domain = list_avoiders(n, domain_class, options);
  const auto codomain = list_avoiders(n, codomain_class, options);  // lexicographic, hence sorted
  row.domain_size = domain.size();
  row.codomain_size = codomain.size();

  std::vector<Permutation> images;
  images.reserve(domain.size());
  for (const auto& p : domain) {
    auto w = map(p);
    if (!std::binary_search(codomain.begin(), codomain.end(), w)) ++row.outside_codomain;
    else if (inverse(w) != p) ++row.roundtrip_failures;
    if (!statistic_ok(p, w)) ++row.statistic_failures;
    images.push_back(std::move(w));
  }
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i)
    if (images[i] == images[i - 1]) ++row.collisions;

  row.pass = row.collisions == 0 && row.outside_codomain == 0 && row.roundtrip_failures == 0 &&
             row.statistic_failures == 0 && row.domain_size == row.codomain_size;
  return row;
}

}  // namespace

std::vector<BigInt> compute_s_sequence(int k, int max_n, const AnalysisContext& ctx) {
  if (k < 4) throw InvalidArgument("s_n needs k >= 4");
  if (max_n < k - 2) throw InvalidArgument("s_n needs max n >= k-2");
  const auto f = count_sequence(build_pattern_set(PatternFamily::Monotone, k - 1), max_n, ctx.cache, ctx.enumeration).terms;
  std::vector<BigInt> s(static_cast<std::size_t>(max_n) + 1, BigInt(0));
  for (int n = 0; n <= max_n; ++n)
    for (int i = k - 2; i <= n; ++i)
      s[static_cast<std::size_t>(n)] += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * f[static_cast<std::size_t>(i)];
  return s;
}

SandwichReport sandwich_check(int k, int max_n, const AnalysisContext& ctx) {
  if (k < 4) throw InvalidArgument("sandwich check needs k >= 4");
  SandwichReport report{k, {}, true};
  if (max_n < k - 2) return report;
  const auto s = compute_s_sequence(k, max_n, ctx);
  const auto counts = a_family_counts(k, max_n, ctx);
  for (int n = k - 2; n <= max_n; ++n) {
    const auto& sn = s[static_cast<std::size_t>(n)];
    SandwichRow row{n, sn, Rational(sn, BigInt(k - 1)), counts[static_cast<std::size_t>(n)], sn, false};
    row.pass = row.lower <= Rational(row.count) && row.count <= row.upper;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

WilfReport wilf_check(const PatternSet& s, const PatternSet& t, int max_n, const AnalysisContext& ctx) {
  const auto left = count_sequence(s, max_n, ctx.cache, ctx.enumeration);
  const auto right = count_sequence(t, max_n, ctx.cache, ctx.enumeration);
  WilfReport report{left.descriptor, right.descriptor, {}, true};
  for (int n = 0; n <= max_n; ++n) {
    const auto& a = left.terms[static_cast<std::size_t>(n)];
    const auto& b = right.terms[static_cast<std::size_t>(n)];
    report.rows.push_back({n, a, b, a == b});
    report.equal = report.equal && a == b;
  }
  return report;
}

RlmaxDistribution rlmax_distribution(const PatternSet& s, int n, const EnumerationOptions& options) {
  RlmaxDistribution dist;
  enumerate_avoiders(
      n, s,
      [&](const Permutation& p) {
        ++dist[right_to_left_maxima(p)];
        return true;
      },
      options);
  return dist;
}

ProfileReport rlmax_profile_compare(const PatternSet& s, const PatternSet& t, int n, const EnumerationOptions& options) {
  ProfileReport report{s.descriptor(), t.descriptor(), n, rlmax_distribution(s, n, options),
                       rlmax_distribution(t, n, options), {}, true};
  std::set<RlmaxConfiguration> keys;
  for (const auto& [config, _] : report.left_distribution) keys.insert(config);
  for (const auto& [config, _] : report.right_distribution) keys.insert(config);
  for (const auto& config : keys) {
    const auto l = report.left_distribution.find(config);
    const auto r = report.right_distribution.find(config);
    const std::uint64_t a = l == report.left_distribution.end() ? 0 : l->second;
    const std::uint64_t b = r == report.right_distribution.end() ? 0 : r->second;
    if (a != b) report.mismatches.push_back(config);
  }
  report.equal = report.mismatches.empty();
  return report;
}

GrowthReport growth_report(int k, int max_n, const AnalysisContext& ctx) {
  if (k < 3) throw InvalidArgument("growth report needs k >= 3");
  if (max_n < 0) throw InvalidArgument("max n must be nonnegative");
  GrowthReport report{k, (k - 2) * (k - 2) + 1, Rational(k * k - 4 * k + 3, 2), {}, {}, {}};
  const auto counts = a_family_counts(k, max_n, ctx);

  const Decimal base(report.base);
  const Decimal exponent = Decimal(numerator(report.exponent).str()) / Decimal(denominator(report.exponent).str());
  std::optional<Decimal> low, high;
  for (int n = 0; n <= max_n; ++n) {
    GrowthRow row{n, counts[static_cast<std::size_t>(n)], {}, {}};
    if (n >= 1) {
      const Decimal c = to_decimal_value(row.count);
      row.nth_root = significant(boost::multiprecision::pow(c, Decimal(1) / Decimal(n)));
      const auto& prev = counts[static_cast<std::size_t>(n - 1)];
      if (prev != 0) row.ratio = to_significant(Rational(row.count, prev));
      const Decimal fitted = c * boost::multiprecision::pow(Decimal(n), exponent) / boost::multiprecision::pow(base, n);
      if (!low || fitted < *low) low = fitted;
      if (!high || fitted > *high) high = fitted;
    }
    report.rows.push_back(std::move(row));
  }
  if (low) report.c_low = significant(*low);
  if (high) report.c_high = significant(*high);
  return report;
}

BijectionReport verify_g_bijection(int l, int max_n, const EnumerationOptions& options) {
  if (l < 3) throw InvalidArgument("g bijection needs l >= 3");
  BijectionReport report{"g", l, {}, true};
  const auto domain = build_pattern_set(PatternFamily::Monotone, l);
  const PatternSet codomain({swapped_monotone(l)});
  for (int n = 0; n <= max_n; ++n) {
    auto row = check_bijection_at(
        n, domain, codomain, [l](const Permutation& p) { return g_map(p, l); },
        [l](const Permutation& w) { return g_inverse(w, l); },
        [l](const Permutation& p, const Permutation& w) {
          return low_corank_entries(p, l - 2) == low_corank_entries(w, l - 2);
        },
        options);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

BijectionReport verify_h_bijection(int k, int max_n, const EnumerationOptions& options) {
  if (k < 4) throw InvalidArgument("h bijection needs k >= 4");
  BijectionReport report{"h", k, {}, true};
  const auto domain = build_pattern_set(PatternFamily::A, k);
  const auto codomain = build_pattern_set(PatternFamily::B, k);
  for (int n = 0; n <= max_n; ++n) {
    auto row = check_bijection_at(
        n, domain, codomain, [k](const Permutation& p) { return h_map(p, k); },
        [k](const Permutation& w) { return h_inverse(w, k); },
        [](const Permutation& p, const Permutation& w) {
          const auto i = rightmost_descent(p);
          if (rightmost_descent(w) != i) return false;
          return !i || w.at(*i) > p.at(*i + 1);
        },
        options);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

nlohmann::ordered_json config_json(const RlmaxConfiguration& config) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : config) out.push_back({e.position, e.value});
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const SandwichReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["factor"] = "1/" + std::to_string(r.k - 1);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"s", row.s.str()},
                    {"lower", to_string(row.lower)},
                    {"count", row.count.str()},
                    {"upper", row.upper.str()},
                    {"pass", row.pass}});
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json to_json(const WilfReport& r) {
  nlohmann::ordered_json j;
  j["left"] = r.left;
  j["right"] = r.right;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"left", row.left.str()}, {"right", row.right.str()}, {"equal", row.equal}});
  j["rows"] = std::move(rows);
  j["equal"] = r.equal;
  return j;
}

nlohmann::ordered_json to_json(const ProfileReport& r) {
  nlohmann::ordered_json j;
  j["left"] = r.left;
  j["right"] = r.right;
  j["n"] = r.n;
  std::set<RlmaxConfiguration> keys;
  for (const auto& [config, _] : r.left_distribution) keys.insert(config);
  for (const auto& [config, _] : r.right_distribution) keys.insert(config);
  auto dist = nlohmann::ordered_json::array();
  for (const auto& config : keys) {
    const auto l = r.left_distribution.find(config);
    const auto rr = r.right_distribution.find(config);
    dist.push_back({{"config", config_json(config)},
                    {"left", l == r.left_distribution.end() ? 0 : l->second},
                    {"right", rr == r.right_distribution.end() ? 0 : rr->second}});
  }
  j["configurations"] = keys.size();
  j["mismatches"] = r.mismatches.size();
  j["distribution"] = std::move(dist);
  j["equal"] = r.equal;
  return j;
}

nlohmann::ordered_json to_json(const GrowthReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["base"] = r.base;
  j["exponent"] = to_string(r.exponent);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"count", row.count.str()}, {"nth_root", row.nth_root}, {"ratio", row.ratio}});
  j["rows"] = std::move(rows);
  j["c_low"] = r.c_low;
  j["c_high"] = r.c_high;
  j["note"] = "finite-range diagnostics; no asymptotic claim";
  return j;
}

nlohmann::ordered_json to_json(const BijectionReport& r) {
  nlohmann::ordered_json j;
  j["map"] = r.map;
  j["param"] = r.param;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"domain", row.domain_size},
                    {"codomain", row.codomain_size},
                    {"collisions", row.collisions},
                    {"outside_codomain", row.outside_codomain},
                    {"roundtrip_failures", row.roundtrip_failures},
                    {"statistic_failures", row.statistic_failures},
                    {"pass", row.pass}});
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  return j;
}

}  // namespace pavane
