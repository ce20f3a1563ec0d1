#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pavane/bigint.hpp"

namespace pavane {

// sum_i P_i(z) F^i with integer polynomials; polys[i][j] is the z^j
// coefficient of P_i. Normalized: content 1, lowest nonzero coefficient of
// the top polynomial positive, trailing zero polynomials dropped.
struct AnnihilatorCandidate {
  std::vector<std::vector<BigInt>> polys;

  [[nodiscard]] int degree_in_f() const { return static_cast<int>(polys.size()) - 1; }
  [[nodiscard]] int degree_in_z() const;

  friend bool operator==(const AnnihilatorCandidate&, const AnnihilatorCandidate&) = default;
};

// Rescales to content 1 and canonical sign; throws InvalidArgument if all zero.
AnnihilatorCandidate normalize(AnnihilatorCandidate candidate);

// e.g. "(2z - z^2)F^2 - (1 + z)F + 1"
std::string to_string(const AnnihilatorCandidate& candidate);

// {"d": 2, "D": 2, "polys": [["1"], ["-1","-1"], ["0","2","-1"]]}
nlohmann::ordered_json to_json(const AnnihilatorCandidate& candidate);
AnnihilatorCandidate candidate_from_json(const nlohmann::json& j);

inline constexpr int kDefaultGuessMargin = 5;

struct GuessOptions {
  // Required surplus of equations over unknowns.
  int margin = kDefaultGuessMargin;
};

// Number of terms needed for a (d, D) search at the given margin.
int terms_required(int deg_f, int deg_z, int margin);

// Searches for sum_{i<=d} P_i F^i == 0 mod z^{N+1} with deg P_i <= D, where
// N + 1 = terms.size(). Among solutions, the one with the smallest degree in
// F, then in z, then max |coefficient| is returned. Returns nullopt when no
// such relation exists at this truncation; that is not evidence of anything
// beyond the searched bounds. Throws InvalidArgument with too few terms.
std::optional<AnnihilatorCandidate> hermite_pade_guess(std::span<const BigInt> terms, int deg_f, int deg_z,
                                                       const GuessOptions& options = {});

struct GuessSweep {
  std::optional<AnnihilatorCandidate> candidate;
  // (d, D) boxes searched, in order, and those skipped for lack of terms.
  std::vector<std::pair<int, int>> searched;
  std::vector<std::pair<int, int>> skipped;
};

// Runs hermite_pade_guess over every (d, D) with d <= max_deg_f, D <= max_deg_z
// that the available terms support, stopping at the first relation found.
GuessSweep hermite_pade_sweep(std::span<const BigInt> terms, int max_deg_f, int max_deg_z,
                              const GuessOptions& options = {});

// True iff sum_i P_i F^i vanishes through z^N.
bool verify_annihilator(std::span<const BigInt> terms, const AnnihilatorCandidate& candidate);

// Integer nullspace basis of an integer matrix (rows x cols), computed by
// fraction-free elimination. Each basis vector is primitive.
std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> matrix, std::size_t cols);

// One integer per line, index 0 first; blank lines and '#' comments skipped.
std::vector<BigInt> read_term_file(const std::filesystem::path& path);
std::vector<BigInt> parse_terms(std::string_view text);

}  // namespace pavane
