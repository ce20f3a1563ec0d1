#include "pavane/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

#include "matcher.hpp"
#include "pavane/count_cache.hpp"
#include "pavane/errors.hpp"

namespace pavane {

namespace {

constexpr int kMaxN = 31;  // used-value bitmask width

// Pruning rules derived from a pattern set.
struct SearchPlan {
  // A_{k,k}: only the leftmost rank-(k-1) entry matters, after which the
  // rest of the permutation is forced to be increasing.
  int a_family_k = 0;
  // Smallest l with 12...l in S (0 if none); an entry of rank >= l is fatal.
  int monotone_limit = 0;
  std::vector<detail::OccurrenceMatcher> matchers;

  explicit SearchPlan(const PatternSet& s) {
    if (auto k = s.as_a_family()) {
      a_family_k = *k;
      return;
    }
    for (const auto& q : s.patterns()) {
      if (q == Permutation::identity(q.size())) {
        if (monotone_limit == 0 || q.size() < monotone_limit) monotone_limit = q.size();
      } else {
        matchers.emplace_back(q);
      }
    }
  }
};

// Depth-first prefix extension in lexicographic order. `Leaf` is called with
// the placed prefix; when fewer than n entries are placed, the permutation
// completes with the unused values in increasing order.
template <class Leaf>
class Search {
public:
  Search(int n, const SearchPlan& plan, Leaf& leaf) : n_(n), plan_(plan), leaf_(leaf) {
    full_ = (1u << n_) - 1u;
    rank_cap_ = plan_.a_family_k > 0 ? plan_.a_family_k - 1 : plan_.monotone_limit;
  }

  void run_from_root() {
    if (n_ == 0) {
      leaf_(prefix_.data(), 0);
      return;
    }
    extend(0);
  }

  void run_with_first(int first) { place(0, first); }

private:
  // Rank of v against the patience tails, capped at rank_cap_ (0 = no cap).
  int rank_of(int v) const {
    int r = 0;
    while (r < tails_len_ && tails_[r] < v) ++r;
    return r + 1;
  }

  void extend(int depth) {
    for (int v = 1; v <= n_ && !stopped_; ++v)
      if (!(used_ & (1u << (v - 1)))) place(depth, v);
  }

  void place(int depth, int v) {
    const int rank = rank_cap_ > 0 ? rank_of(v) : 0;
    prefix_[depth] = v;

    if (plan_.a_family_k > 0) {
      if (rank == rank_cap_) {
        const unsigned rest = full_ & ~used_ & ~(1u << (v - 1));
        if (rest == 0 || std::countr_zero(rest) + 1 > v) finish(depth + 1);
        return;
      }
    } else {
      if (plan_.monotone_limit > 0 && rank >= plan_.monotone_limit) return;
      const std::span<const int> text(prefix_.data(), static_cast<std::size_t>(depth + 1));
      for (const auto& m : plan_.matchers)
        if (m.occurs_ending_at_last(text)) return;
    }

    if (depth + 1 == n_) {
      finish(n_);
      return;
    }

    int saved_tail = 0;
    const bool grows = rank_cap_ > 0 && rank > tails_len_;
    if (rank_cap_ > 0) {
      if (grows) ++tails_len_;
      saved_tail = tails_[rank - 1];
      tails_[rank - 1] = v;
    }
    used_ |= 1u << (v - 1);
    extend(depth + 1);
    used_ &= ~(1u << (v - 1));
    if (rank_cap_ > 0) {
      tails_[rank - 1] = saved_tail;
      if (grows) --tails_len_;
    }
  }

  void finish(int placed) {
    if (!leaf_(prefix_.data(), placed)) stopped_ = true;
  }

  int n_;
  const SearchPlan& plan_;
  Leaf& leaf_;
  unsigned full_ = 0;
  unsigned used_ = 0;
  int rank_cap_ = 0;
  std::array<int, kMaxN + 1> prefix_{};
  std::array<int, kMaxN + 1> tails_{};
  int tails_len_ = 0;
  bool stopped_ = false;
};

struct CountingLeaf {
  std::uint64_t count = 0;
  bool operator()(const int*, int) {
    ++count;
    return true;
  }
};

void require_size(int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (n > kMaxN) throw CeilingExceeded("n = " + std::to_string(n) + " is beyond the enumerator's limit of 31");
}

}  // namespace

int enumeration_ceiling(const PatternSet& s) { return s.as_a_family() ? kAFamilyCeiling : kGenericCeiling; }

void check_ceiling(int n, const PatternSet& s, const EnumerationOptions& options) {
  require_size(n);
  if (options.ignore_ceiling) return;
  const int ceiling = enumeration_ceiling(s);
  if (n > ceiling)
    throw CeilingExceeded("n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(ceiling) + " for " +
                          s.descriptor());
}

void enumerate_avoiders(int n, const PatternSet& s, const AvoiderVisitor& visit, const EnumerationOptions& options) {
  check_ceiling(n, s, options);
  const SearchPlan plan(s);
  auto leaf = [&, values = std::vector<int>(static_cast<std::size_t>(n))](const int* prefix, int placed) mutable {
    unsigned used = 0;
    for (int i = 0; i < placed; ++i) {
      values[static_cast<std::size_t>(i)] = prefix[i];
      used |= 1u << (prefix[i] - 1);
    }
    int pos = placed;
    for (int v = 1; v <= n; ++v)
      if (!(used & (1u << (v - 1)))) values[static_cast<std::size_t>(pos++)] = v;
    return visit(Permutation(values));
  };
  Search<decltype(leaf)> search(n, plan, leaf);
  search.run_from_root();
}

std::vector<Permutation> list_avoiders(int n, const PatternSet& s, const EnumerationOptions& options) {
  std::vector<Permutation> out;
  enumerate_avoiders(
      n, s,
      [&](const Permutation& p) {
        out.push_back(p);
        return true;
      },
      options);
  return out;
}

std::uint64_t count_avoiders_with_first(int n, const PatternSet& s, int first) {
  require_size(n);
  if (first < 1 || first > n) throw InvalidArgument("first entry out of range");
  const SearchPlan plan(s);
  CountingLeaf leaf;
  Search<CountingLeaf> search(n, plan, leaf);
  search.run_with_first(first);
  return leaf.count;
}

BigInt count_avoiders(int n, const PatternSet& s, const EnumerationOptions& options) {
  check_ceiling(n, s, options);
  if (n == 0) return 1;

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(n));

  std::vector<std::uint64_t> partial(static_cast<std::size_t>(n), 0);
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int first = next++; first <= n; first = next++)
      partial[static_cast<std::size_t>(first - 1)] = count_avoiders_with_first(n, s, first);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  BigInt total = 0;
  for (auto c : partial) total += c;
  return total;
}

CountSequence count_sequence(const PatternSet& s, int max_n, CountCache* cache, const EnumerationOptions& options) {
  if (max_n < 0) throw InvalidArgument("max n must be nonnegative");
  check_ceiling(max_n, s, options);
  CountSequence seq{s.descriptor(), {}};
  for (int n = 0; n <= max_n; ++n) {
    if (cache) {
      if (auto hit = cache->lookup(seq.descriptor, n)) {
        seq.terms.push_back(*hit);
        continue;
      }
    }
    seq.terms.push_back(count_avoiders(n, s, options));
    if (cache) cache->store(seq.descriptor, n, seq.terms.back());
  }
  return seq;
}

}  // namespace pavane
