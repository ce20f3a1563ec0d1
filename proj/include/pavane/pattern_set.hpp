#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pavane/permutation.hpp"

namespace pavane {

enum class PatternFamily {
  A,         // A_{k,k}: increasing prefix of length k-1, last entry < k
  B,         // B_{k,k}: prefix 213...(k-1)
  Am,        // A_{k,k,m}: prefix m(m-1)...1(m+1)...(k-1)
  Monotone,  // the single pattern 12...l
  Explicit,  // set:<p1>;<p2>;...
};

class PatternSet {
public:
  // Explicit set. Patterns are deduplicated and kept in lexicographic order.
  explicit PatternSet(std::vector<Permutation> patterns);

  [[nodiscard]] PatternFamily family() const noexcept { return family_; }
  // k for A/B/Am, l for Monotone, 0 for Explicit.
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] const std::vector<Permutation>& patterns() const noexcept { return patterns_; }

  // Canonical descriptor text (e.g. "A:5", "set:2134;3214").
  [[nodiscard]] std::string descriptor() const;

  [[nodiscard]] int shortest_pattern_length() const;

  // k when the patterns are exactly A_{k,k}, whatever the descriptor says.
  [[nodiscard]] std::optional<int> as_a_family() const;

  friend bool operator==(const PatternSet& a, const PatternSet& b) { return a.patterns_ == b.patterns_; }

private:
  friend PatternSet build_pattern_set(PatternFamily, int, std::optional<int>);
  PatternSet(PatternFamily family, int k, int m, std::vector<Permutation> patterns);

  PatternFamily family_ = PatternFamily::Explicit;
  int k_ = 0;
  int m_ = 0;
  std::vector<Permutation> patterns_;
};

// A/B/Am families (and Monotone, where k is the pattern length).
// Ranges: A needs k >= 3, B needs k >= 4, Am needs 1 < m < k-1, Monotone k >= 1.
PatternSet build_pattern_set(PatternFamily family, int k, std::optional<int> m = std::nullopt);

// Grammar: A:<k> | B:<k> | Am:<k>:<m> | mono:<l> | set:<p1>;<p2>;...
PatternSet parse_pattern_set(std::string_view descriptor);

}  // namespace pavane
