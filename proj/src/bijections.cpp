#include "pavane/bijections.hpp"

#include <algorithm>
#include <functional>

#include "pavane/containment.hpp"
#include "pavane/errors.hpp"
#include "pavane/pattern_set.hpp"

namespace pavane {

namespace {

void require_param(int l) {
  if (l < 3) throw InvalidArgument("bijection parameter l must be at least 3, got " + std::to_string(l));
}

// 2,1,3,4,...,l
Permutation swapped_monotone(int l) {
  std::vector<int> e(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  std::swap(e[0], e[1]);
  return Permutation(std::move(e));
}

std::string text_of(std::span<const int> values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::vector<int> g_map(std::span<const int> values, int l) {
  require_param(l);
  if (lis_length(values) >= l)
    throw InvalidArgument("g_map: " + text_of(values) + " contains 12..." + std::to_string(l));

  const auto n = values.size();
  const auto corank = corank_vector(values);
  std::vector<bool> fixed(n);
  std::vector<int> pool;
  for (std::size_t i = 0; i < n; ++i) {
    fixed[i] = corank.values[i] <= l - 2;
    if (!fixed[i]) pool.push_back(values[i]);
  }
  std::sort(pool.begin(), pool.end(), std::greater<>());

  std::vector<int> out(n);
  std::vector<int> out_corank(n);
  // 1 + largest co-rank among later entries bigger than v
  auto corank_at = [&](std::size_t i, int v) {
    int best = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (out[j] > v) best = std::max(best, out_corank[j]);
    return best + 1;
  };

  for (std::size_t i = n; i-- > 0;) {
    if (fixed[i]) {
      out[i] = values[i];
    } else {
      const auto it = std::find_if(pool.begin(), pool.end(), [&](int v) { return corank_at(i, v) >= l - 1; });
      if (it == pool.end())
        throw InternalError("g_map: no placeable value at position " + std::to_string(i + 1) + " of " +
                            text_of(values));
      out[i] = *it;
      pool.erase(it);
    }
    out_corank[i] = corank_at(i, out[i]);
  }
  return out;
}

Permutation g_map(const Permutation& p, int l) { return Permutation(g_map(p.entries(), l)); }

std::vector<int> g_inverse(std::span<const int> values, int l) {
  require_param(l);
  if (contains(values, swapped_monotone(l)))
    throw InvalidArgument("g_inverse: " + text_of(values) + " contains " + to_string(swapped_monotone(l)));

  const auto n = values.size();
  const auto corank = corank_vector(values);
  std::vector<int> pool;
  for (std::size_t i = 0; i < n; ++i)
    if (corank.values[i] > l - 2) pool.push_back(values[i]);
  std::sort(pool.begin(), pool.end(), std::greater<>());

  std::vector<int> out(values.begin(), values.end());
  auto next = pool.begin();
  for (std::size_t i = 0; i < n; ++i)
    if (corank.values[i] > l - 2) out[i] = *next++;
  return out;
}

Permutation g_inverse(const Permutation& w, int l) { return Permutation(g_inverse(w.entries(), l)); }

Permutation h_map(const Permutation& p, int k) {
  if (k < 4) throw InvalidArgument("h_map requires k >= 4");
  if (!avoids_A_fast(p, k)) throw InvalidArgument("h_map: " + to_string(p) + " contains a pattern of A:" + std::to_string(k));
  const auto descent = rightmost_descent(p);
  if (!descent) return p;

  const auto entries = p.entries();
  const auto prefix = entries.first(static_cast<std::size_t>(*descent));
  if (lis_length(prefix) >= k - 1)
    throw InternalError("h_map: prefix of " + to_string(p) + " contains 12..." + std::to_string(k - 1));
  auto out = g_map(prefix, k - 1);
  out.insert(out.end(), entries.begin() + *descent, entries.end());
  return Permutation(std::move(out));
}

Permutation h_inverse(const Permutation& w, int k) {
  if (k < 4) throw InvalidArgument("h_inverse requires k >= 4");
  if (!avoids_all(w, build_pattern_set(PatternFamily::B, k)))
    throw InvalidArgument("h_inverse: " + to_string(w) + " contains a pattern of B:" + std::to_string(k));
  const auto descent = rightmost_descent(w);
  if (!descent) return w;

  const auto entries = w.entries();
  const auto prefix = entries.first(static_cast<std::size_t>(*descent));
  if (contains(prefix, swapped_monotone(k - 1)))
    throw InternalError("h_inverse: prefix of " + to_string(w) + " contains " + to_string(swapped_monotone(k - 1)));
  auto out = g_inverse(prefix, k - 1);
  out.insert(out.end(), entries.begin() + *descent, entries.end());
  return Permutation(std::move(out));
}

}  // namespace pavane
