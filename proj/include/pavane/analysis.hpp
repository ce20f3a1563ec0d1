#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pavane/bigint.hpp"
#include "pavane/enumerate.hpp"
#include "pavane/pattern_set.hpp"
#include "pavane/permutation.hpp"

namespace pavane {

class CountCache;

struct AnalysisContext {
  CountCache* cache = nullptr;
  EnumerationOptions enumeration;
};

// s_n = sum_{i=k-2}^{n} C(n,i) f_i with f_i = |Av_i(12...(k-1))|, n = 0..max_n.
std::vector<BigInt> compute_s_sequence(int k, int max_n, const AnalysisContext& ctx = {});

struct SandwichRow {
  int n;
  BigInt s;
  Rational lower;  // s / (k-1)
  BigInt count;
  BigInt upper;    // s
  bool pass;
};

struct SandwichReport {
  int k;
  std::vector<SandwichRow> rows;  // n = k-2 .. max_n
  bool pass;
};

// s_n/(k-1) <= |Av_n(A_{k,k})| <= s_n for n = k-2..max_n.
SandwichReport sandwich_check(int k, int max_n, const AnalysisContext& ctx = {});

struct WilfRow {
  int n;
  BigInt left;
  BigInt right;
  bool equal;
};

struct WilfReport {
  std::string left;
  std::string right;
  std::vector<WilfRow> rows;  // n = 0..max_n
  bool equal;
};

WilfReport wilf_check(const PatternSet& s, const PatternSet& t, int max_n, const AnalysisContext& ctx = {});

// Right-to-left maxima of one permutation, as sorted (position, value) pairs.
using RlmaxConfiguration = std::vector<PositionedEntry>;
using RlmaxDistribution = std::map<RlmaxConfiguration, std::uint64_t>;

RlmaxDistribution rlmax_distribution(const PatternSet& s, int n, const EnumerationOptions& options = {});

struct ProfileReport {
  std::string left;
  std::string right;
  int n;
  RlmaxDistribution left_distribution;
  RlmaxDistribution right_distribution;
  // Configurations whose multiplicities differ between the two classes.
  std::vector<RlmaxConfiguration> mismatches;
  bool equal;
};

// Equal multisets of right-to-left-maxima configurations are necessary for a
// bijection Av_n(S) -> Av_n(T) that fixes every right-to-left maximum.
ProfileReport rlmax_profile_compare(const PatternSet& s, const PatternSet& t, int n,
                                    const EnumerationOptions& options = {});

struct GrowthRow {
  int n;
  BigInt count;
  std::string nth_root;  // count^(1/n), 6 significant digits; empty for n = 0
  std::string ratio;     // count_n / count_{n-1}; empty for n = 0
};

// Finite-range diagnostics only; nothing here is asserted.
struct GrowthReport {
  int k;
  int base;             // (k-2)^2 + 1
  Rational exponent;    // (k^2 - 4k + 3) / 2
  std::vector<GrowthRow> rows;
  std::string c_low;    // min_n count * n^e / K^n over n >= 1
  std::string c_high;   // max_n of the same
};

GrowthReport growth_report(int k, int max_n, const AnalysisContext& ctx = {});

struct BijectionRow {
  int n;
  std::uint64_t domain_size = 0;
  std::uint64_t codomain_size = 0;
  std::uint64_t collisions = 0;           // images hit more than once
  std::uint64_t outside_codomain = 0;     // images not in the target class
  std::uint64_t roundtrip_failures = 0;   // inverse(map(p)) != p
  std::uint64_t statistic_failures = 0;   // g: co-rank fixation; h: rightmost descent
  bool pass = false;
};

struct BijectionReport {
  std::string map;  // "g" or "h"
  int param;
  std::vector<BijectionRow> rows;  // n = 0..max_n
  bool pass;
};

// g_map with parameter l on Av_n(12...l) for n = 0..max_n.
BijectionReport verify_g_bijection(int l, int max_n, const EnumerationOptions& options = {});
// h_map with parameter k on Av_n(A_{k,k}) for n = 0..max_n.
BijectionReport verify_h_bijection(int k, int max_n, const EnumerationOptions& options = {});

nlohmann::ordered_json to_json(const SandwichReport& report);
nlohmann::ordered_json to_json(const WilfReport& report);
nlohmann::ordered_json to_json(const ProfileReport& report);
nlohmann::ordered_json to_json(const GrowthReport& report);
nlohmann::ordered_json to_json(const BijectionReport& report);

}  // namespace pavane
