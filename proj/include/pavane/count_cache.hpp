#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "pavane/bigint.hpp"

namespace pavane {

struct CacheRecord {
  std::string descriptor;
  int n;
  BigInt count;
};

// serialize: {"class":"A:5","n":7,"count":"3961"}
std::string format_cache_record(const CacheRecord& record);
CacheRecord parse_cache_record(std::string_view line);

// Directory of line-delimited JSON files, one per descriptor. Lookups are
// safe from several threads; stores go through one lock.
class CountCache {
public:
  explicit CountCache(std::filesystem::path directory);

  [[nodiscard]] const std::filesystem::path& directory() const noexcept { return directory_; }

  // File holding records for `descriptor`.
  [[nodiscard]] std::filesystem::path file_for(std::string_view descriptor) const;

  std::optional<BigInt> lookup(const std::string& descriptor, int n);

  // Appends a record unless (descriptor, n) is already present. A conflicting
  // stored value raises CacheError.
  void store(const std::string& descriptor, int n, const BigInt& count);

private:
  using Table = std::map<int, BigInt>;
  Table& load(const std::string& descriptor);

  std::filesystem::path directory_;
  std::mutex mutex_;
  std::map<std::string, Table, std::less<>> tables_;
};

// Portable file stem for a descriptor: [A-Za-z0-9-] kept, anything else becomes '_'.
std::string sanitize_descriptor(std::string_view descriptor);

}  // namespace pavane
