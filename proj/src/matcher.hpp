#pragma once

#include <span>
#include <vector>

#include "pavane/permutation.hpp"

namespace pavane::detail {

// Backtracking matcher for one pattern. Pattern entries are assigned in a
// fixed order (left to right, or right to left when anchored at the last
// text entry); each step's candidate value is bounded by the nearest
// already-assigned pattern values below and above it.
class OccurrenceMatcher {
public:
  explicit OccurrenceMatcher(const Permutation& pattern);

  [[nodiscard]] int length() const noexcept { return static_cast<int>(lower_.size()); }

  // Any occurrence in text.
  [[nodiscard]] bool occurs_in(std::span<const int> text) const;

  // An occurrence that uses text.back() as the pattern's last entry.
  [[nodiscard]] bool occurs_ending_at_last(std::span<const int> text) const;

private:
  bool forward(std::span<const int> text, int step, int from, int* pos) const;
  bool backward(std::span<const int> text, int step, int below, int* pos) const;

  // For forward steps t: pattern index of the nearest smaller/larger value
  // among q[0..t-1], or -1.
  std::vector<int> lower_, upper_;
  // Same for backward steps over q[t+1..L-1].
  std::vector<int> lower_back_, upper_back_;
};

}  // namespace pavane::detail
