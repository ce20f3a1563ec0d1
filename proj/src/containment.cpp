#include "pavane/containment.hpp"

#include <algorithm>

#include "matcher.hpp"
#include "pavane/errors.hpp"

namespace pavane {

bool contains(std::span<const int> text, const Permutation& pattern) {
  return detail::OccurrenceMatcher(pattern).occurs_in(text);
}

bool contains_ending_at_last(std::span<const int> text, const Permutation& pattern) {
  return detail::OccurrenceMatcher(pattern).occurs_ending_at_last(text);
}

bool avoids_all(std::span<const int> text, const PatternSet& patterns) {
  return std::none_of(patterns.patterns().begin(), patterns.patterns().end(),
                      [&](const Permutation& q) { return contains(text, q); });
}

int lis_length(std::span<const int> values) {
  const auto ranks = rank_vector_fast(values);
  return ranks.values.empty() ? 0 : *std::max_element(ranks.values.begin(), ranks.values.end());
}

namespace {

// 0-indexed position of the leftmost entry of rank `rank`, or size() if none.
std::size_t leftmost_of_rank(std::span<const int> values, int rank) {
  const auto ranks = rank_vector_fast(values);
  const auto it = std::find(ranks.values.begin(), ranks.values.end(), rank);
  return static_cast<std::size_t>(it - ranks.values.begin());
}

}  // namespace

bool avoids_A_fast(std::span<const int> values, int k) {
  if (k < 3) throw InvalidArgument("avoids_A_fast requires k >= 3");
  const auto j = leftmost_of_rank(values, k - 1);
  for (std::size_t i = j + 1; i < values.size(); ++i)
    if (values[i] < values[i - 1]) return false;
  return true;
}

Decomposition decompose_front_tail(const Permutation& p, int k) {
  if (!avoids_A_fast(p, k))
    throw InvalidArgument(to_string(p) + " contains a pattern of A:" + std::to_string(k));
  const auto j = leftmost_of_rank(p.entries(), k - 1);
  Decomposition d;
  d.split = static_cast<int>(j) + 1;
  d.front.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(j));
  d.tail.assign(p.begin() + static_cast<std::ptrdiff_t>(j), p.end());
  return d;
}

}  // namespace pavane
