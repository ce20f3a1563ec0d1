#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pavane::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidArguments = 2,
  kCeilingExceeded = 3,
  kCacheFailure = 4,
};

enum class OutputFormat { Json, Csv, Text };

inline constexpr int kCliGenericCeiling = 12;
inline constexpr int kCliAFamilyCeiling = 13;

struct CliConfig {
  std::optional<std::filesystem::path> cache_dir;  // --cache, else $PAVANE_CACHE
  OutputFormat format = OutputFormat::Text;
  bool force_max_n = false;                        // lift the enumeration ceilings
  unsigned jobs = 1;
};

// argv[0] is the program name.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace pavane::cli
