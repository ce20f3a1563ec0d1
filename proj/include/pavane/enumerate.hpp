#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pavane/bigint.hpp"
#include "pavane/pattern_set.hpp"
#include "pavane/permutation.hpp"

namespace pavane {

class CountCache;

inline constexpr int kGenericCeiling = 13;
inline constexpr int kAFamilyCeiling = 14;

struct EnumerationOptions {
  // Worker threads for counting; 0 means hardware concurrency.
  unsigned jobs = 1;
  // Lifts kGenericCeiling / kAFamilyCeiling.
  bool ignore_ceiling = false;
};

// Largest n accepted for S unless the ceiling is ignored.
int enumeration_ceiling(const PatternSet& s);

// Throws CeilingExceeded when n is above the ceiling for S.
void check_ceiling(int n, const PatternSet& s, const EnumerationOptions& options);

// Return false from the visitor to stop early.
using AvoiderVisitor = std::function<bool(const Permutation&)>;

// Visits Av_n(S) in lexicographic order. Prefixes are pruned as soon as the
// newly placed entry completes a forbidden pattern.
void enumerate_avoiders(int n, const PatternSet& s, const AvoiderVisitor& visit,
                        const EnumerationOptions& options = {});

std::vector<Permutation> list_avoiders(int n, const PatternSet& s, const EnumerationOptions& options = {});

// |Av_n(S)| without materializing the permutations. With several jobs the
// search is partitioned by the value of the first entry.
BigInt count_avoiders(int n, const PatternSet& s, const EnumerationOptions& options = {});

// Only the subtree whose first entry is `first` (1..n); building block of
// count_avoiders.
std::uint64_t count_avoiders_with_first(int n, const PatternSet& s, int first);

struct CountSequence {
  std::string descriptor;
  std::vector<BigInt> terms;  // terms[n] = |Av_n(S)|, n = 0..N

  friend bool operator==(const CountSequence&, const CountSequence&) = default;
};

// Terms n = 0..max_n, reusing and extending `cache` when given.
CountSequence count_sequence(const PatternSet& s, int max_n, CountCache* cache = nullptr,
                             const EnumerationOptions& options = {});

}  // namespace pavane
