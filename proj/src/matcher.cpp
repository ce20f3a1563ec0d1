#include "matcher.hpp"

#include <array>
#include <climits>

namespace pavane::detail {

namespace {
constexpr int kInline = 32;
}  // namespace

OccurrenceMatcher::OccurrenceMatcher(const Permutation& pattern) {
  const int len = pattern.size();
  lower_.assign(len, -1);
  upper_.assign(len, -1);
  lower_back_.assign(len, -1);
  upper_back_.assign(len, -1);
  for (int t = 0; t < len; ++t) {
    const int v = pattern[t];
    for (int s = 0; s < len; ++s) {
      if (s == t) continue;
      const int w = pattern[s];
      auto& lo = s < t ? lower_[t] : lower_back_[t];
      auto& hi = s < t ? upper_[t] : upper_back_[t];
      if (w < v && (lo < 0 || w > pattern[lo])) lo = s;
      if (w > v && (hi < 0 || w < pattern[hi])) hi = s;
    }
  }
}

bool OccurrenceMatcher::forward(std::span<const int> text, int step, int from, int* pos) const {
  const int len = length();
  if (step == len) return true;
  const int n = static_cast<int>(text.size());
  const int lo = lower_[step] < 0 ? INT_MIN : text[pos[lower_[step]]];
  const int hi = upper_[step] < 0 ? INT_MAX : text[pos[upper_[step]]];
  for (int i = from; i <= n - (len - step); ++i) {
    const int v = text[i];
    if (v <= lo || v >= hi) continue;
    pos[step] = i;
    if (forward(text, step + 1, i + 1, pos)) return true;
  }
  return false;
}

bool OccurrenceMatcher::backward(std::span<const int> text, int step, int below, int* pos) const {
  if (step < 0) return true;
  const int lo = lower_back_[step] < 0 ? INT_MIN : text[pos[lower_back_[step]]];
  const int hi = upper_back_[step] < 0 ? INT_MAX : text[pos[upper_back_[step]]];
  for (int i = below - 1; i >= step; --i) {
    const int v = text[i];
    if (v <= lo || v >= hi) continue;
    pos[step] = i;
    if (backward(text, step - 1, i, pos)) return true;
  }
  return false;
}

bool OccurrenceMatcher::occurs_in(std::span<const int> text) const {
  if (length() > static_cast<int>(text.size())) return false;
  if (length() <= kInline) {
    std::array<int, kInline> pos{};
    return forward(text, 0, 0, pos.data());
  }
  std::vector<int> pos(static_cast<std::size_t>(length()));
  return forward(text, 0, 0, pos.data());
}

bool OccurrenceMatcher::occurs_ending_at_last(std::span<const int> text) const {
  const int len = length();
  const int n = static_cast<int>(text.size());
  if (len > n || len == 0) return false;
  if (len <= kInline) {
    std::array<int, kInline> pos{};
    pos[len - 1] = n - 1;
    return backward(text, len - 2, n - 1, pos.data());
  }
  std::vector<int> pos(static_cast<std::size_t>(len));
  pos[len - 1] = n - 1;
  return backward(text, len - 2, n - 1, pos.data());
}

}  // namespace pavane::detail
