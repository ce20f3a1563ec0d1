#include "pavane/guess.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pavane/errors.hpp"

namespace pavane {

namespace {

using Row = std::vector<BigInt>;

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

void make_primitive(Row& row) {
  BigInt g = 0;
  for (const auto& v : row)
    if (v != 0) g = g == 0 ? abs_big(v) : boost::multiprecision::gcd(g, abs_big(v));
  if (g > 1)
    for (auto& v : row) v /= g;
}

// F^0 .. F^d truncated to the length of terms.
std::vector<Row> powers(std::span<const BigInt> terms, int d) {
  const auto len = terms.size();
  std::vector<Row> out;
  out.emplace_back(len, BigInt(0));
  out[0][0] = 1;
  for (int i = 1; i <= d; ++i) {
    Row next(len, BigInt(0));
    const auto& prev = out.back();
    for (std::size_t a = 0; a < len; ++a) {
      if (prev[a] == 0) continue;
      for (std::size_t b = 0; a + b < len; ++b) next[a + b] += prev[a] * terms[b];
    }
    out.push_back(std::move(next));
  }
  return out;
}

BigInt max_abs(const AnnihilatorCandidate& c) {
  BigInt best = 0;
  for (const auto& p : c.polys)
    for (const auto& v : p) best = std::max(best, abs_big(v));
  return best;
}

std::string monomial(const BigInt& magnitude, int power, bool show_one) {
  std::string out;
  if (magnitude != 1 || (power == 0 && show_one)) out = magnitude.str();
  if (power >= 1) out += "z";
  if (power >= 2) out += "^" + std::to_string(power);
  return out;
}

// Polynomial with sign of its lowest coefficient factored out.
std::string poly_body(const std::vector<BigInt>& poly, bool flip) {
  std::string out;
  for (std::size_t j = 0; j < poly.size(); ++j) {
    BigInt c = flip ? BigInt(-poly[j]) : poly[j];
    if (c == 0) continue;
    if (out.empty()) out = (c < 0 ? "-" : "");
    else out += c < 0 ? " - " : " + ";
    out += monomial(abs_big(c), static_cast<int>(j), true);
  }
  return out;
}

}  // namespace

int AnnihilatorCandidate::degree_in_z() const {
  int best = 0;
  for (const auto& p : polys)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) best = std::max(best, static_cast<int>(j));
  return best;
}

AnnihilatorCandidate normalize(AnnihilatorCandidate c) {
  for (auto& p : c.polys) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
  }
  auto is_zero = [](const std::vector<BigInt>& p) { return std::all_of(p.begin(), p.end(), [](auto& v) { return v == 0; }); };
  while (!c.polys.empty() && is_zero(c.polys.back())) c.polys.pop_back();
  if (c.polys.empty()) throw InvalidArgument("annihilator candidate is identically zero");

  BigInt g = 0;
  for (const auto& p : c.polys)
    for (const auto& v : p)
      if (v != 0) g = g == 0 ? abs_big(v) : boost::multiprecision::gcd(g, abs_big(v));
  const auto& top = c.polys.back();
  const auto lead = std::find_if(top.begin(), top.end(), [](auto& v) { return v != 0; });
  if (*lead < 0) g = -g;
  for (auto& p : c.polys)
    for (auto& v : p) v /= g;
  return c;
}

std::string to_string(const AnnihilatorCandidate& c) {
  std::string out;
  for (int i = c.degree_in_f(); i >= 0; --i) {
    const auto& p = c.polys[static_cast<std::size_t>(i)];
    const auto nonzero = std::count_if(p.begin(), p.end(), [](auto& v) { return v != 0; });
    if (nonzero == 0) continue;
    const auto lowest = std::find_if(p.begin(), p.end(), [](auto& v) { return v != 0; });
    const bool negative = *lowest < 0;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";

    std::string factor;
    if (nonzero == 1) {
      factor = monomial(abs_big(*lowest), static_cast<int>(lowest - p.begin()), i == 0);
    } else {
      factor = "(" + poly_body(p, negative) + ")";
    }
    out += factor;
    if (i >= 1) out += "F";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

nlohmann::ordered_json to_json(const AnnihilatorCandidate& c) {
  nlohmann::ordered_json j;
  j["d"] = c.degree_in_f();
  j["D"] = c.degree_in_z();
  auto polys = nlohmann::ordered_json::array();
  for (const auto& p : c.polys) {
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& v : p) coeffs.push_back(v.str());
    polys.push_back(std::move(coeffs));
  }
  j["polys"] = std::move(polys);
  j["text"] = to_string(c);
  return j;
}

AnnihilatorCandidate candidate_from_json(const nlohmann::json& j) {
  try {
    AnnihilatorCandidate c;
    for (const auto& p : j.at("polys")) {
      std::vector<BigInt> coeffs;
      for (const auto& v : p) coeffs.push_back(v.is_string() ? parse_bigint(v.get<std::string>()) : BigInt(v.get<long long>()));
      c.polys.push_back(std::move(coeffs));
    }
    if (j.contains("d") && j.at("d").get<int>() != static_cast<int>(c.polys.size()) - 1)
      throw InvalidArgument("'d' disagrees with the number of polynomials");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed annihilator JSON: ") + e.what());
  }
}

int terms_required(int deg_f, int deg_z, int margin) {
  return (deg_f + 1) * (deg_z + 1) + std::max(margin, 1);
}

std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < m.size(); ++col) {
    std::size_t r = prow;
    while (r < m.size() && m[r][col] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[prow]);
    make_primitive(m[prow]);
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == prow || m[o][col] == 0) continue;
      const BigInt g = boost::multiprecision::gcd(abs_big(m[prow][col]), abs_big(m[o][col]));
      const BigInt a = m[prow][col] / g;
      const BigInt b = m[o][col] / g;
      for (std::size_t c = 0; c < cols; ++c) m[o][c] = a * m[o][c] - b * m[prow][c];
      make_primitive(m[o]);
    }
    pivot_cols.push_back(col);
    ++prow;
  }

  BigInt lcm = 1;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    const BigInt p = abs_big(m[r][pivot_cols[r]]);
    lcm = lcm / boost::multiprecision::gcd(lcm, p) * p;
  }

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    Row x(cols, BigInt(0));
    x[f] = lcm;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -m[r][f] * lcm / m[r][pivot_cols[r]];
    make_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<AnnihilatorCandidate> hermite_pade_guess(std::span<const BigInt> terms, int deg_f, int deg_z,
                                                       const GuessOptions& options) {
  if (deg_f < 1 || deg_z < 0) throw InvalidArgument("guess needs deg-f >= 1 and deg-z >= 0");
  const int needed = terms_required(deg_f, deg_z, options.margin);
  if (static_cast<int>(terms.size()) < needed)
    throw InvalidArgument("insufficient terms: (d, D) = (" + std::to_string(deg_f) + ", " + std::to_string(deg_z) +
                          ") needs " + std::to_string(needed) + ", got " + std::to_string(terms.size()));

  const auto f_powers = powers(terms, deg_f);
  const std::size_t rows = terms.size();
  for (int d = 1; d <= deg_f; ++d) {
    for (int D = 0; D <= deg_z; ++D) {
      const auto width = static_cast<std::size_t>(D + 1);
      const std::size_t cols = static_cast<std::size_t>(d + 1) * width;
      std::vector<Row> matrix(rows, Row(cols, BigInt(0)));
      for (std::size_t n = 0; n < rows; ++n)
        for (int i = 0; i <= d; ++i)
          for (std::size_t j = 0; j <= static_cast<std::size_t>(D) && j <= n; ++j)
            matrix[n][static_cast<std::size_t>(i) * width + j] = f_powers[static_cast<std::size_t>(i)][n - j];

      const auto basis = integer_nullspace(std::move(matrix), cols);
      if (basis.empty()) continue;

      std::optional<AnnihilatorCandidate> best;
      for (const auto& x : basis) {
        AnnihilatorCandidate c;
        for (int i = 0; i <= d; ++i)
          c.polys.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * width),
                               x.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i + 1) * width));
        c = normalize(std::move(c));
        if (!best || max_abs(c) < max_abs(*best)) best = std::move(c);
      }
      if (!verify_annihilator(terms, *best))
        throw InternalError("guessed annihilator fails verification");
      return best;
    }
  }
  return std::nullopt;
}

GuessSweep hermite_pade_sweep(std::span<const BigInt> terms, int max_deg_f, int max_deg_z,
                              const GuessOptions& options) {
  if (max_deg_f < 1 || max_deg_z < 0) throw InvalidArgument("guess needs deg-f >= 1 and deg-z >= 0");
  GuessSweep sweep;
  const int available = static_cast<int>(terms.size());
  for (int d = 1; d <= max_deg_f; ++d) {
    for (int D = 0; D <= max_deg_z; ++D) {
      if (terms_required(d, D, options.margin) > available) {
        sweep.skipped.emplace_back(d, D);
        continue;
      }
      sweep.searched.emplace_back(d, D);
      sweep.candidate = hermite_pade_guess(terms, d, D, options);
      if (sweep.candidate) return sweep;
    }
  }
  return sweep;
}

bool verify_annihilator(std::span<const BigInt> terms, const AnnihilatorCandidate& c) {
  if (terms.empty()) return false;
  const bool nontrivial = std::any_of(c.polys.begin(), c.polys.end(), [](const auto& p) {
    return std::any_of(p.begin(), p.end(), [](const auto& v) { return v != 0; });
  });
  if (!nontrivial) return false;

  const auto f_powers = powers(terms, std::max(c.degree_in_f(), 0));
  const std::size_t len = terms.size();
  Row residual(len, BigInt(0));
  for (std::size_t i = 0; i < c.polys.size(); ++i)
    for (std::size_t j = 0; j < c.polys[i].size() && j < len; ++j) {
      if (c.polys[i][j] == 0) continue;
      for (std::size_t n = j; n < len; ++n) residual[n] += c.polys[i][j] * f_powers[i][n - j];
    }
  return std::all_of(residual.begin(), residual.end(), [](const auto& v) { return v == 0; });
}

std::vector<BigInt> parse_terms(std::string_view text) {
  std::vector<BigInt> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      terms.push_back(parse_bigint(std::string_view(line).substr(first, last - first + 1)));
    } catch (const InvalidArgument&) {
      throw InvalidArgument("term file line " + std::to_string(lineno) + ": not an integer");
    }
  }
  return terms;
}

std::vector<BigInt> read_term_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open term file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_terms(buffer.str());
}

}  // namespace pavane
