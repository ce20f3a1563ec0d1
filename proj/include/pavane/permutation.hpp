#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pavane {

// A permutation of {1..n} in one-line notation. Positions exposed by the
// statistics below are 1-indexed.
class Permutation {
public:
  Permutation() = default;

  // Throws InvalidArgument unless `entries` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(entries_.size()); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }

  // 1-indexed access.
  [[nodiscard]] int at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }
  [[nodiscard]] int operator[](std::size_t index) const noexcept { return entries_[index]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> entries_;
};

Permutation make_permutation(std::span<const int> raw);

// Accepts comma-separated values ("3,7,5,2,4,1,6"), or a bare digit string
// ("3752416") when n <= 9. Whitespace around values is ignored. The empty
// string is the empty permutation.
Permutation parse_permutation(std::string_view text);
// Same grammar, for sequences of distinct positive values (not necessarily 1..n).
std::vector<int> parse_sequence(std::string_view text);

// Bare digits when n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& p);
std::string to_csv(const Permutation& p);

// Per-entry statistic aligned with the entries of a permutation.
struct StatVector {
  std::vector<int> values;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

struct PositionedEntry {
  int position;  // 1-indexed
  int value;

  friend bool operator==(const PositionedEntry&, const PositionedEntry&) = default;
  friend auto operator<=>(const PositionedEntry&, const PositionedEntry&) = default;
};

// values[h] = length of the longest increasing subsequence ending at entry h.
StatVector rank_vector(std::span<const int> values);
inline StatVector rank_vector(const Permutation& p) { return rank_vector(p.entries()); }

// Patience-sorting O(n log n) variant; agrees with rank_vector.
StatVector rank_vector_fast(std::span<const int> values);

// values[i] = length of the longest increasing subsequence starting at entry i.
StatVector corank_vector(std::span<const int> values);
inline StatVector corank_vector(const Permutation& p) { return corank_vector(p.entries()); }

std::vector<PositionedEntry> right_to_left_maxima(const Permutation& p);

// Largest 1-indexed i with p_i > p_{i+1}.
std::optional<int> rightmost_descent(std::span<const int> values);
inline std::optional<int> rightmost_descent(const Permutation& p) { return rightmost_descent(p.entries()); }

Permutation direct_sum(const Permutation& q, const Permutation& r);

// The permutation order-isomorphic to `values`. Throws on duplicates.
Permutation reduce_subsequence(std::span<const int> values);

}  // namespace pavane
