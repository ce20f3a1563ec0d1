#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "pavane/containment.hpp"
#include "pavane/count_cache.hpp"
#include "pavane/enumerate.hpp"
#include "pavane/errors.hpp"

using namespace pavane;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::vector<BigInt> terms(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

std::uint64_t brute_count(int n, const PatternSet& s) {
  std::uint64_t c = 0;
  for (const auto& p : oracle::all_permutations(n)) {
    bool ok = true;
    for (const auto& q : s.patterns()) ok = ok && !oracle::contains(p, q);
    c += ok;
  }
  return c;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("pavane-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("enumerate_avoiders small cases") {
  const auto a3 = list_avoiders(3, build_pattern_set(PatternFamily::A, 3));
  CHECK(a3 == std::vector<Permutation>{P("123"), P("213"), P("312"), P("321")});

  const auto empty = list_avoiders(0, parse_pattern_set("mono:2"));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  const auto a5 = list_avoiders(5, build_pattern_set(PatternFamily::A, 5));
  CHECK(a5.size() == 116);
  const auto patterns = build_pattern_set(PatternFamily::A, 5);
  for (const auto& q : patterns.patterns())
    CHECK_FALSE(std::binary_search(a5.begin(), a5.end(), q));
}

TEST_CASE("enumeration is lexicographic, duplicate-free and exact") {
  for (const char* desc : {"A:4", "B:4", "mono:3", "set:2413;3142", "set:132", "set:1", "set:21;123"}) {
    const auto s = parse_pattern_set(desc);
    for (int n = 0; n <= 7; ++n) {
      const auto perms = list_avoiders(n, s);
      REQUIRE(std::adjacent_find(perms.begin(), perms.end(), std::greater_equal<>()) == perms.end());
      for (const auto& p : perms) REQUIRE(avoids_all(p, s));
      REQUIRE(perms.size() == brute_count(n, s));
    }
  }
}

TEST_CASE("visitor can stop early") {
  int seen = 0;
  enumerate_avoiders(6, parse_pattern_set("mono:3"), [&](const Permutation&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("count_avoiders") {
  CHECK(count_avoiders(6, build_pattern_set(PatternFamily::A, 3)) == 32);
  CHECK(count_avoiders(5, build_pattern_set(PatternFamily::A, 5)) == 116);
  CHECK(count_avoiders(5, parse_pattern_set("mono:4")) == brute_count(5, parse_pattern_set("mono:4")));
  CHECK(count_avoiders(5, parse_pattern_set("mono:4")) == 103);
  for (int n = 0; n < 6; ++n) CHECK(count_avoiders(n, build_pattern_set(PatternFamily::A, 6)) == factorial(n));
}

TEST_CASE("count sequences against brute-force filtering") {
  const auto mono4 = parse_pattern_set("mono:4");
  std::vector<BigInt> brute;
  for (int n = 0; n <= 7; ++n) brute.emplace_back(brute_count(n, mono4));
  CHECK(brute == terms({1, 1, 2, 6, 23, 103, 513, 2761}));
  CHECK(count_sequence(mono4, 7).terms == brute);

  const auto a4 = build_pattern_set(PatternFamily::A, 4);
  std::vector<BigInt> brute_a4;
  for (int n = 0; n <= 6; ++n) brute_a4.emplace_back(brute_count(n, a4));
  CHECK(brute_a4 == terms({1, 1, 2, 6, 21, 79, 311}));
  CHECK(count_sequence(a4, 6).terms == brute_a4);

  CHECK(count_sequence(build_pattern_set(PatternFamily::A, 3), 5).terms == terms({1, 1, 2, 4, 8, 16}));
}

TEST_CASE("A-family fast path and the generic path agree") {
  // set:... with the same patterns but disguised by an extra, implied pattern
  // forces the generic matcher.
  for (int k = 3; k <= 5; ++k) {
    const auto a = build_pattern_set(PatternFamily::A, k);
    auto patterns = a.patterns();
    patterns.push_back(direct_sum(patterns.front(), P("1")));
    const PatternSet generic(patterns);
    REQUIRE_FALSE(generic.as_a_family().has_value());
    for (int n = 0; n <= 9; ++n) REQUIRE(count_avoiders(n, a) == count_avoiders(n, generic));
  }
}

TEST_CASE("reverse-complement symmetry of monotone classes") {
  for (int l = 2; l <= 4; ++l) {
    const PatternSet inc({Permutation::identity(l)});
    const PatternSet dec({Permutation::decreasing(l)});
    for (int n = 0; n <= 9; ++n) REQUIRE(count_avoiders(n, inc) == count_avoiders(n, dec));
  }
}

TEST_CASE("parallel counting is independent of partitioning") {
  const auto s = parse_pattern_set("B:5");
  BigInt by_first = 0;
  for (int first = 1; first <= 9; ++first) by_first += count_avoiders_with_first(9, s, first);
  CHECK(count_avoiders(9, s, {.jobs = 1}) == by_first);
  CHECK(count_avoiders(9, s, {.jobs = 3}) == by_first);
  CHECK(count_avoiders(9, s, {.jobs = 0}) == by_first);
}

TEST_CASE("ceilings") {
  const auto generic = parse_pattern_set("mono:3");
  const auto a = parse_pattern_set("A:5");
  CHECK(enumeration_ceiling(generic) == kGenericCeiling);
  CHECK(enumeration_ceiling(a) == kAFamilyCeiling);
  CHECK_THROWS_AS(count_avoiders(kGenericCeiling + 1, generic), CeilingExceeded);
  CHECK_THROWS_AS(count_sequence(a, kAFamilyCeiling + 1), CeilingExceeded);
  CHECK_THROWS_AS(count_avoiders(-1, generic), InvalidArgument);
  // mono:2 has one avoider at every n; the override makes large n reachable.
  CHECK(count_avoiders(20, parse_pattern_set("mono:2"), {.ignore_ceiling = true}) == 1);
  CHECK_THROWS_AS(count_avoiders(32, parse_pattern_set("mono:2"), {.ignore_ceiling = true}), CeilingExceeded);
}

TEST_CASE("cache record format") {
  const CacheRecord r{"A:5", 7, BigInt("123456789012345678901234567890")};
  const auto line = format_cache_record(r);
  CHECK(line == R"({"class":"A:5","n":7,"count":"123456789012345678901234567890"})");
  const auto back = parse_cache_record(line);
  CHECK(back.descriptor == r.descriptor);
  CHECK(back.n == r.n);
  CHECK(back.count == r.count);
  CHECK_THROWS_AS(parse_cache_record("{"), CacheError);
  CHECK_THROWS_AS(parse_cache_record(R"({"class":"A:5","n":1,"count":"x"})"), CacheError);
  CHECK_THROWS_AS(parse_cache_record(R"({"class":"A:5","n":1,"count":"-3"})"), CacheError);
  CHECK(sanitize_descriptor("set:2134;3214") == "set_2134_3214");
}

TEST_CASE("count_sequence reuses and extends the cache") {
  TempDir dir;
  const auto s = parse_pattern_set("Am:5:3");
  CountSequence cold;
  {
    CountCache cache(dir.path);
    cold = count_sequence(s, 6, &cache);
  }
  CHECK(cold.terms == count_sequence(s, 6).terms);

  const auto file = CountCache(dir.path).file_for(s.descriptor());
  REQUIRE(std::filesystem::exists(file));

  // Plant a wrong value to prove that cached entries are served as-is.
  {
    std::ofstream out(file, std::ios::trunc);
    out << format_cache_record({s.descriptor(), 3, 999}) << '\n';
  }
  CountCache cache(dir.path);
  const auto warm = count_sequence(s, 7, &cache);
  CHECK(warm.terms[3] == 999);
  CHECK(warm.terms[7] == count_avoiders(7, s));

  std::size_t lines = 0;
  std::ifstream in(file);
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 8);

  CHECK_THROWS_AS(cache.store(s.descriptor(), 3, 6), CacheError);
}

TEST_CASE("cache round trip reproduces terms") {
  TempDir dir;
  const auto s = parse_pattern_set("set:2413;3142");
  const auto fresh = count_sequence(s, 8);
  {
    CountCache cache(dir.path);
    for (std::size_t n = 0; n < fresh.terms.size(); ++n) cache.store(fresh.descriptor, static_cast<int>(n), fresh.terms[n]);
  }
  CountCache reread(dir.path);
  for (std::size_t n = 0; n < fresh.terms.size(); ++n)
    CHECK(reread.lookup(fresh.descriptor, static_cast<int>(n)) == fresh.terms[n]);
  CHECK_FALSE(reread.lookup(fresh.descriptor, 9).has_value());
}

TEST_CASE("cache I/O failures are CacheError") {
  TempDir dir;
  const auto blocker = dir.path / "file";
  std::ofstream(blocker) << "x";
  CountCache cache(blocker / "sub");
  CHECK_THROWS_AS(count_sequence(parse_pattern_set("mono:3"), 3, &cache), CacheError);

  std::ofstream(dir.path / "A_3.jsonl") << "not json\n";
  CountCache broken(dir.path);
  CHECK_THROWS_AS(count_sequence(parse_pattern_set("A:3"), 3, &broken), CacheError);
}
