#pragma once

#include <span>
#include <vector>

#include "pavane/permutation.hpp"

namespace pavane {

// Generalized Simion-Schmidt map Av_n(12...l) -> Av_n(213...l). Entries of
// co-rank <= l-2 stay in place; the other slots are refilled right to left,
// each taking the largest unused value whose co-rank there is >= l-1.
//
// Works on any sequence of distinct values. Throws InvalidArgument when l < 3
// or the input contains 12...l, and InternalError if no value can be placed.
std::vector<int> g_map(std::span<const int> values, int l);
Permutation g_map(const Permutation& p, int l);

// Inverse of g_map: fixed entries as above, the remaining values written into
// the remaining slots in decreasing order. Input must avoid 213...l.
std::vector<int> g_inverse(std::span<const int> values, int l);
Permutation g_inverse(const Permutation& w, int l);

// Av_n(A_{k,k}) -> Av_n(B_{k,k}), k >= 4: g_map with l = k-1 applied to the
// prefix ending at the rightmost descent; the increasing suffix is kept.
Permutation h_map(const Permutation& p, int k);

// Inverse of h_map. Input must avoid B_{k,k}.
Permutation h_inverse(const Permutation& w, int k);

}  // namespace pavane
