#include "pavane/pattern_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pavane/errors.hpp"

namespace pavane {

namespace {

void canonicalize(std::vector<Permutation>& patterns) {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

// Prefix shape of length k-1 for the family, as a pattern on 1..k-1.
std::vector<int> prefix_shape(PatternFamily family, int k, int m) {
  std::vector<int> shape(static_cast<std::size_t>(k - 1));
  std::iota(shape.begin(), shape.end(), 1);
  if (family == PatternFamily::B) m = 2;
  if (family != PatternFamily::A) std::reverse(shape.begin(), shape.begin() + m);
  return shape;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw InvalidArgument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw InvalidArgument("pattern set must not be empty");
  for (const auto& q : patterns_)
    if (q.empty()) throw InvalidArgument("patterns must be nonempty");
  canonicalize(patterns_);
}

PatternSet::PatternSet(PatternFamily family, int k, int m, std::vector<Permutation> patterns)
    : family_(family), k_(k), m_(m), patterns_(std::move(patterns)) {
  canonicalize(patterns_);
}

std::string PatternSet::descriptor() const {
  switch (family_) {
    case PatternFamily::A: return "A:" + std::to_string(k_);
    case PatternFamily::B: return "B:" + std::to_string(k_);
    case PatternFamily::Am: return "Am:" + std::to_string(k_) + ":" + std::to_string(m_);
    case PatternFamily::Monotone: return "mono:" + std::to_string(k_);
    case PatternFamily::Explicit: break;
  }
  std::string out = "set:";
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ';';
    out += to_string(patterns_[i]);
  }
  return out;
}

int PatternSet::shortest_pattern_length() const {
  int best = patterns_.front().size();
  for (const auto& q : patterns_) best = std::min(best, q.size());
  return best;
}

std::optional<int> PatternSet::as_a_family() const {
  if (family_ == PatternFamily::A) return k_;
  const int k = patterns_.front().size();
  if (k < 3 || static_cast<int>(patterns_.size()) != k - 1) return std::nullopt;
  if (patterns_ == build_pattern_set(PatternFamily::A, k).patterns()) return k;
  return std::nullopt;
}

PatternSet build_pattern_set(PatternFamily family, int k, std::optional<int> m) {
  switch (family) {
    case PatternFamily::A:
      if (k < 3) throw InvalidArgument("A:k requires k >= 3");
      break;
    case PatternFamily::B:
      if (k < 4) throw InvalidArgument("B:k requires k >= 4");
      break;
    case PatternFamily::Am:
      if (!m || *m <= 1 || *m >= k - 1) throw InvalidArgument("Am:k:m requires 1 < m < k-1");
      break;
    case PatternFamily::Monotone:
      if (k < 1) throw InvalidArgument("mono:l requires l >= 1");
      return PatternSet(family, k, 0, {Permutation::identity(k)});
    case PatternFamily::Explicit:
      throw InvalidArgument("explicit pattern sets are built from their patterns");
  }

  const auto shape = prefix_shape(family, k, m.value_or(0));
  std::vector<Permutation> patterns;
  for (int last = 1; last <= k - 1; ++last) {
    // The prefix uses {1..k} \ {last}; shape value s maps to s, or s+1 once s >= last.
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(k));
    for (int s : shape) e.push_back(s < last ? s : s + 1);
    e.push_back(last);
    patterns.emplace_back(std::move(e));
  }
  return PatternSet(family, k, family == PatternFamily::Am ? *m : 0, std::move(patterns));
}

PatternSet parse_pattern_set(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw InvalidArgument("pattern set descriptor needs a ':' (e.g. A:5, mono:4, set:2134)");
  const auto tag = descriptor.substr(0, colon);
  const auto rest = descriptor.substr(colon + 1);

  if (tag == "A") return build_pattern_set(PatternFamily::A, parse_int(rest, "k"));
  if (tag == "B") return build_pattern_set(PatternFamily::B, parse_int(rest, "k"));
  if (tag == "mono") return build_pattern_set(PatternFamily::Monotone, parse_int(rest, "l"));
  if (tag == "Am") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw InvalidArgument("Am descriptor is Am:<k>:<m>");
    return build_pattern_set(PatternFamily::Am, parse_int(rest.substr(0, sep), "k"),
                             parse_int(rest.substr(sep + 1), "m"));
  }
  if (tag == "set") {
    std::vector<Permutation> patterns;
    std::size_t start = 0;
    while (true) {
      const auto semi = rest.find(';', start);
      patterns.push_back(parse_permutation(rest.substr(start, semi - start)));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return PatternSet(std::move(patterns));
  }
  throw InvalidArgument("unknown pattern family '" + std::string(tag) + "'");
}

}  // namespace pavane
