#pragma once

#include <vector>

#include "pavane/pattern_set.hpp"
#include "pavane/permutation.hpp"

namespace pavane {

// True iff some subsequence of `text` is order-isomorphic to `pattern`.
// `text` may be any sequence of distinct values.
bool contains(std::span<const int> text, const Permutation& pattern);
inline bool contains(const Permutation& p, const Permutation& q) { return contains(p.entries(), q); }

// True iff contains(text, q) is false for every q in S.
bool avoids_all(std::span<const int> text, const PatternSet& patterns);
inline bool avoids_all(const Permutation& p, const PatternSet& s) { return avoids_all(p.entries(), s); }

// True iff `text` has an occurrence of `pattern` whose last entry is text.back().
bool contains_ending_at_last(std::span<const int> text, const Permutation& pattern);

int lis_length(std::span<const int> values);
inline int lis_length(const Permutation& p) { return lis_length(p.entries()); }

// Avoidance of A_{k,k}: the entries from the leftmost entry of rank k-1 to
// the end must be increasing. Requires k >= 3.
bool avoids_A_fast(std::span<const int> values, int k);
inline bool avoids_A_fast(const Permutation& p, int k) { return avoids_A_fast(p.entries(), k); }

struct Decomposition {
  int split;                // 1-indexed start of the tail, n+1 when the tail is empty
  std::vector<int> front;   // p_1 ... p_{split-1}
  std::vector<int> tail;    // p_split ... p_n, increasing

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws InvalidArgument if p contains a pattern of A_{k,k}.
Decomposition decompose_front_tail(const Permutation& p, int k);

}  // namespace pavane
