#include "pavane/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pavane/errors.hpp"

namespace pavane {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw InvalidArgument("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]) throw InvalidArgument("duplicate entry " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.rbegin(), e.rend(), 1);
  return Permutation(std::move(e));
}

Permutation make_permutation(std::span<const int> raw) { return Permutation(std::vector<int>(raw.begin(), raw.end())); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_entry(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw InvalidArgument("empty permutation entry");
  long long v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidArgument("invalid permutation entry '" + std::string(token) + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000) throw InvalidArgument("permutation entry too large");
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<int> parse_sequence(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.empty()) return values;
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9)
      throw InvalidArgument("bare digit strings are only accepted for n <= 9; use commas");
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidArgument("invalid permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      values.push_back(parse_entry(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw InvalidArgument("entries must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("repeated entry in '" + std::string(text) + "'");
  return values;
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_sequence(text)); }

std::string to_csv(const Permutation& p) {
  std::string out;
  for (int v : p) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string to_string(const Permutation& p) {
  if (p.size() > 9) return to_csv(p);
  std::string out;
  for (int v : p) out += static_cast<char>('0' + v);
  return out;
}

StatVector rank_vector(std::span<const int> values) {
  const auto n = values.size();
  StatVector r{std::vector<int>(n, 1)};
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t j = 0; j < h; ++j)
      if (values[j] < values[h]) r.values[h] = std::max(r.values[h], r.values[j] + 1);
  return r;
}

StatVector rank_vector_fast(std::span<const int> values) {
  // tails[r] = smallest value ending an increasing subsequence of length r+1
  std::vector<int> tails;
  StatVector r{std::vector<int>(values.size())};
  for (std::size_t h = 0; h < values.size(); ++h) {
    const auto it = std::lower_bound(tails.begin(), tails.end(), values[h]);
    r.values[h] = static_cast<int>(it - tails.begin()) + 1;
    if (it == tails.end()) tails.push_back(values[h]);
    else *it = values[h];
  }
  return r;
}

StatVector corank_vector(std::span<const int> values) {
  const auto n = values.size();
  StatVector c{std::vector<int>(n, 1)};
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (values[j] > values[i]) c.values[i] = std::max(c.values[i], c.values[j] + 1);
  return c;
}

std::vector<PositionedEntry> right_to_left_maxima(const Permutation& p) {
  std::vector<PositionedEntry> out;
  int best = 0;
  for (int i = p.size(); i >= 1; --i) {
    if (p.at(i) > best) {
      best = p.at(i);
      out.push_back({i, best});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<int> rightmost_descent(std::span<const int> values) {
  for (std::size_t i = values.size(); i-- > 1;)
    if (values[i - 1] > values[i]) return static_cast<int>(i);
  return std::nullopt;
}

Permutation direct_sum(const Permutation& q, const Permutation& r) {
  std::vector<int> e(q.begin(), q.end());
  for (int v : r) e.push_back(v + q.size());
  return Permutation(std::move(e));
}

Permutation reduce_subsequence(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> reduced(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]])
      throw InvalidArgument("reduce_subsequence: duplicate value " + std::to_string(values[order[r]]));
    reduced[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(reduced));
}

}  // namespace pavane
