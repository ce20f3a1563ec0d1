#include "pavane/count_cache.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "pavane/errors.hpp"

namespace pavane {

std::string format_cache_record(const CacheRecord& record) {
  nlohmann::ordered_json j;
  j["class"] = record.descriptor;
  j["n"] = record.n;
  j["count"] = to_decimal(record.count);
  return j.dump();
}

CacheRecord parse_cache_record(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    CacheRecord r{j.at("class").get<std::string>(), j.at("n").get<int>(), 0};
    if (r.n < 0) throw CacheError("negative n in cache record");
    r.count = parse_bigint(j.at("count").get<std::string>());
    if (r.count < 0) throw CacheError("negative count in cache record");
    return r;
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError("malformed cache record '" + std::string(line) + "': " + e.what());
  }
}

std::string sanitize_descriptor(std::string_view descriptor) {
  std::string out;
  for (char c : descriptor) out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
  return out;
}

CountCache::CountCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path CountCache::file_for(std::string_view descriptor) const {
  return directory_ / (sanitize_descriptor(descriptor) + ".jsonl");
}

CountCache::Table& CountCache::load(const std::string& descriptor) {
  if (auto it = tables_.find(descriptor); it != tables_.end()) return it->second;
  Table table;
  const auto path = file_for(descriptor);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot read cache file " + path.string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto record = parse_cache_record(line);
      if (record.descriptor != descriptor) continue;
      auto [it, inserted] = table.emplace(record.n, record.count);
      if (!inserted && it->second != record.count)
        throw CacheError("conflicting cache records for " + descriptor + " n=" + std::to_string(record.n));
    }
    if (in.bad()) throw CacheError("error reading cache file " + path.string());
  }
  return tables_.emplace(descriptor, std::move(table)).first->second;
}

std::optional<BigInt> CountCache::lookup(const std::string& descriptor, int n) {
  std::lock_guard lock(mutex_);
  const auto& table = load(descriptor);
  if (auto it = table.find(n); it != table.end()) return it->second;
  return std::nullopt;
}

void CountCache::store(const std::string& descriptor, int n, const BigInt& count) {
  std::lock_guard lock(mutex_);
  auto& table = load(descriptor);
  if (auto it = table.find(n); it != table.end()) {
    if (it->second != count)
      throw CacheError("cache already holds a different count for " + descriptor + " n=" + std::to_string(n));
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw CacheError("cannot create cache directory " + directory_.string() + ": " + ec.message());
  const auto path = file_for(descriptor);
  std::ofstream out(path, std::ios::app);
  out << format_cache_record({descriptor, n, count}) << '\n';
  out.flush();
  if (!out) throw CacheError("cannot write cache file " + path.string());
  table.emplace(n, count);
}

}  // namespace pavane
