#include "pavane/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "pavane/analysis.hpp"
#include "pavane/bijections.hpp"
#include "pavane/containment.hpp"
#include "pavane/count_cache.hpp"
#include "pavane/enumerate.hpp"
#include "pavane/errors.hpp"
#include "pavane/guess.hpp"
#include "pavane/series.hpp"

namespace pavane::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_text(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string join(const std::vector<BigInt>& values, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? sep : "") + values[i].str();
  return s;
}

Json string_array(const std::vector<BigInt>& values) {
  auto a = Json::array();
  for (const auto& v : values) a.push_back(v.str());
  return a;
}

std::string csv_of(std::span<const int> values) {
  std::string s;
  for (int v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::vector<int> to_vector(const Permutation& p) { return {p.begin(), p.end()}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string config_text(const RlmaxConfiguration& config) {
  std::string s;
  for (const auto& e : config) s += (s.empty() ? "" : " ") + std::to_string(e.position) + ":" + std::to_string(e.value);
  return s;
}

class Runner {
public:
  Runner(CliConfig config, std::ostream& out, std::ostream& err) : config_(std::move(config)), out_(out), err_(err) {
    if (config_.cache_dir) cache_ = std::make_unique<CountCache>(*config_.cache_dir);
  }

  int count(const std::string& desc, int max_n) {
    const auto s = parse_pattern_set(desc);
    guard(s, max_n);
    const auto seq = count_sequence(s, max_n, cache_.get(), options());
    Table t{{"n", "count"}, {}};
    for (std::size_t n = 0; n < seq.terms.size(); ++n) t.rows.push_back({std::to_string(n), seq.terms[n].str()});
    emit({{"command", "count"}, {"class", seq.descriptor}, {"max_n", max_n}, {"terms", string_array(seq.terms)}}, t,
         [&] { out_ << join(seq.terms) << '\n'; });
    return kSuccess;
  }

  int list(const std::string& desc, int n) {
    const auto s = parse_pattern_set(desc);
    guard(s, n);
    const auto perms = list_avoiders(n, s, options());
    auto arr = Json::array();
    Table t{{"permutation"}, {}};
    for (const auto& p : perms) {
      arr.push_back(to_string(p));
      t.rows.push_back({to_string(p)});
    }
    emit({{"command", "list"},
          {"class", s.descriptor()},
          {"n", n},
          {"count", std::to_string(perms.size())},
          {"permutations", std::move(arr)}},
         t, [&] {
           for (const auto& p : perms) out_ << to_string(p) << '\n';
         });
    return kSuccess;
  }

  int check(const std::string& perm, const std::string& desc) {
    const auto p = parse_permutation(perm);
    const auto s = parse_pattern_set(desc);
    auto found = Json::array();
    for (const auto& q : s.patterns())
      if (contains(p, q)) found.push_back(to_string(q));
    const std::string verdict = found.empty() ? "avoids" : "contains";
    Table t{{"perm", "class", "verdict"}, {{to_string(p), s.descriptor(), verdict}}};
    emit({{"command", "check"},
          {"perm", to_string(p)},
          {"class", s.descriptor()},
          {"verdict", verdict},
          {"contained_patterns", std::move(found)}},
         t, [&] { out_ << verdict << '\n'; });
    return kSuccess;
  }

  int biject(const std::string& map, int param, const std::string& perm) {
    // g and its inverse act on any sequence of distinct values; h needs a permutation.
    const bool on_sequence = map == "g" || map == "g-inv";
    const std::vector<int> input = on_sequence ? parse_sequence(perm) : to_vector(parse_permutation(perm));
    std::vector<int> image;
    if (map == "g") image = g_map(input, param);
    else if (map == "g-inv") image = g_inverse(input, param);
    else if (map == "h") image = to_vector(h_map(Permutation(input), param));
    else if (map == "h-inv") image = to_vector(h_inverse(Permutation(input), param));
    else throw InvalidArgument("unknown map '" + map + "' (expected g, g-inv, h, h-inv)");
    Table t{{"input", "output"}, {{csv_of(input), csv_of(image)}}};
    emit({{"command", "biject"}, {"map", map}, {"param", param}, {"input", csv_of(input)}, {"output", csv_of(image)}},
         t, [&] { out_ << csv_of(image) << '\n'; });
    return kSuccess;
  }

  int verify_wilf(const std::string& left, const std::string& right, int max_n) {
    const auto s = parse_pattern_set(left);
    const auto t = parse_pattern_set(right);
    guard(s, max_n);
    guard(t, max_n);
    const auto report = wilf_check(s, t, max_n, context());
    Table table{{"n", report.left, report.right, "equal"}, {}};
    for (const auto& r : report.rows) table.rows.push_back({std::to_string(r.n), r.left.str(), r.right.str(), yes_no(r.equal)});
    Json j = {{"command", "verify wilf"}};
    j.update(to_json(report));
    emit(j, table, [&] {
      write_text(out_, table);
      out_ << (report.equal ? "PASS" : "FAIL") << ": " << report.left << " and " << report.right
           << (report.equal ? " agree" : " differ") << " for n <= " << max_n << '\n';
    });
    return report.equal ? kSuccess : kVerificationFailed;
  }

  int verify_sandwich(int k, int max_n) {
    if (k < 4) throw InvalidArgument("sandwich check needs k >= 4");
    guard(build_pattern_set(PatternFamily::A, k), max_n);
    guard(build_pattern_set(PatternFamily::Monotone, k - 1), max_n);
    const auto report = sandwich_check(k, max_n, context());
    Table table{{"n", "s_n", "lower", "count", "upper", "pass"}, {}};
    for (const auto& r : report.rows)
      table.rows.push_back({std::to_string(r.n), r.s.str(), to_significant(r.lower), r.count.str(), r.upper.str(),
                            yes_no(r.pass)});
    Json j = {{"command", "verify sandwich"}};
    j.update(to_json(report));
    emit(j, table, [&] {
      write_text(out_, table);
      out_ << (report.pass ? "PASS" : "FAIL") << ": s_n/" << k - 1 << " <= |Av_n(A:" << k << ")| <= s_n\n";
    });
    return report.pass ? kSuccess : kVerificationFailed;
  }

  int verify_bijection(const std::string& map, int param, int max_n) {
    BijectionReport report;
    if (map == "g") {
      if (param < 3) throw InvalidArgument("g needs l >= 3");
      guard(build_pattern_set(PatternFamily::Monotone, param), max_n);
      report = verify_g_bijection(param, max_n, options());
    } else if (map == "h") {
      if (param < 4) throw InvalidArgument("h needs k >= 4");
      guard(build_pattern_set(PatternFamily::A, param), max_n);
      guard(build_pattern_set(PatternFamily::B, param), max_n);
      report = verify_h_bijection(param, max_n, options());
    } else {
      throw InvalidArgument("unknown map '" + map + "' (expected g or h)");
    }
    Table table{{"n", "domain", "codomain", "collisions", "outside", "roundtrip", "statistic", "pass"}, {}};
    for (const auto& r : report.rows)
      table.rows.push_back({std::to_string(r.n), std::to_string(r.domain_size), std::to_string(r.codomain_size),
                            std::to_string(r.collisions), std::to_string(r.outside_codomain),
                            std::to_string(r.roundtrip_failures), std::to_string(r.statistic_failures), yes_no(r.pass)});
    Json j = {{"command", "verify bijection"}};
    j.update(to_json(report));
    emit(j, table, [&] {
      write_text(out_, table);
      out_ << (report.pass ? "PASS" : "FAIL") << ": " << map << " with parameter " << param << " for n <= " << max_n
           << '\n';
    });
    return report.pass ? kSuccess : kVerificationFailed;
  }

  int series_a44(int order) {
    const auto s = gf_A44(order);
    std::vector<BigInt> coeffs;
    for (const auto& c : s.coeffs()) coeffs.push_back(numerator(c));
    Table t{{"n", "coefficient"}, {}};
    for (std::size_t n = 0; n < coeffs.size(); ++n) t.rows.push_back({std::to_string(n), coeffs[n].str()});
    emit({{"command", "series a44"}, {"order", order}, {"coefficients", string_array(coeffs)}}, t,
         [&] { out_ << join(coeffs) << '\n'; });
    return kSuccess;
  }

  int guess(const std::string& file, int deg_f, int deg_z, int margin, bool sweep) {
    const auto terms = read_term_file(file);
    const GuessOptions opts{margin};
    std::optional<AnnihilatorCandidate> found;
    std::string searched;
    if (sweep) {
      const auto result = hermite_pade_sweep(terms, deg_f, deg_z, opts);
      if (result.searched.empty())
        throw InvalidArgument("insufficient terms: no (d, D) box fits " + std::to_string(terms.size()) + " terms");
      found = result.candidate;
      for (const auto& [d, D] : result.searched) searched += (searched.empty() ? "" : " ") + std::to_string(d) + "/" + std::to_string(D);
    } else {
      found = hermite_pade_guess(terms, deg_f, deg_z, opts);
    }
    const std::string bounds = "d <= " + std::to_string(deg_f) + ", D <= " + std::to_string(deg_z);
    const std::string message = found ? to_string(*found)
                                      : "none found: no annihilator with " + bounds + " at " +
                                            std::to_string(terms.size()) + " terms";
    Json j = {{"command", "guess"},     {"terms", terms.size()}, {"deg_f", deg_f}, {"deg_z", deg_z},
              {"margin", margin},       {"sweep", sweep},        {"found", found.has_value()}};
    j["candidate"] = found ? to_json(*found) : Json(nullptr);
    j["verified"] = found ? verify_annihilator(terms, *found) : false;
    j["message"] = message;
    Table t{{"found", "candidate"}, {{yes_no(found.has_value()), message}}};
    emit(j, t, [&] {
      out_ << message << '\n';
      if (sweep) out_ << "searched (d/D): " << searched << '\n';
    });
    return kSuccess;
  }

  int report_growth(int k, int max_n) {
    if (k < 3) throw InvalidArgument("growth report needs k >= 3");
    guard(build_pattern_set(PatternFamily::A, k), max_n);
    const auto report = growth_report(k, max_n, context());
    Table table{{"n", "count", "nth_root", "ratio"}, {}};
    for (const auto& r : report.rows) table.rows.push_back({std::to_string(r.n), r.count.str(), r.nth_root, r.ratio});
    Json j = {{"command", "report growth"}};
    j.update(to_json(report));
    emit(j, table, [&] {
      write_text(out_, table);
      out_ << "base K = " << report.base << ", exponent e = " << to_string(report.exponent) << '\n'
           << "count * n^e / K^n over 1 <= n <= " << max_n << ": min " << report.c_low << ", max " << report.c_high
           << " (finite-range diagnostic)\n";
    });
    return kSuccess;
  }

  int report_rlmax(const std::string& left, const std::string& right, int n) {
    const auto s = parse_pattern_set(left);
    const auto t = parse_pattern_set(right);
    guard(s, n);
    guard(t, n);
    const auto report = rlmax_profile_compare(s, t, n, options());
    Table table{{"configuration", report.left, report.right}, {}};
    const auto json = to_json(report);
    for (const auto& row : json["distribution"]) {
      RlmaxConfiguration config;
      for (const auto& e : row["config"]) config.push_back({e[0].get<int>(), e[1].get<int>()});
      table.rows.push_back({config_text(config), std::to_string(row["left"].get<std::uint64_t>()),
                            std::to_string(row["right"].get<std::uint64_t>())});
    }
    Json j = {{"command", "report rlmax"}};
    j.update(json);
    emit(j, table, [&] {
      write_text(out_, table);
      out_ << (report.equal ? "equal" : "different") << " right-to-left-maxima profiles at n = " << n << " ("
           << report.mismatches.size() << " mismatched configurations)\n";
    });
    return kSuccess;
  }

private:
  EnumerationOptions options() const { return {config_.jobs, config_.force_max_n}; }
  AnalysisContext context() { return {cache_.get(), options()}; }

  void guard(const PatternSet& s, int n) {
    if (n < 0) throw InvalidArgument("n must be nonnegative");
    const int ceiling = s.as_a_family() ? kCliAFamilyCeiling : kCliGenericCeiling;
    if (n <= ceiling) return;
    if (!config_.force_max_n)
      throw CeilingExceeded("n = " + std::to_string(n) + " exceeds the default ceiling " + std::to_string(ceiling) +
                            " for " + s.descriptor() + " (use --force-max-n)");
    err_ << "warning: n = " << n << " is above the default ceiling " << ceiling << " for " << s.descriptor()
         << "; this may take a long time\n";
  }

  template <class TextWriter>
  void emit(const Json& j, const Table& table, TextWriter text) {
    switch (config_.format) {
      case OutputFormat::Json: out_ << j.dump(2) << '\n'; break;
      case OutputFormat::Csv: write_csv(out_, table); break;
      case OutputFormat::Text: text(); break;
    }
  }

  CliConfig config_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<CountCache> cache_;
};

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation pattern avoidance: enumeration, bijections, series and relation guessing", "pavane"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "text";
  std::string cache_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", cache_dir, "Count cache directory (default $PAVANE_CACHE)");
  app.add_option("--jobs", config.jobs, "Worker threads for counting (0 = all cores)");
  app.add_flag("--force-max-n", config.force_max_n, "Allow n above the default ceilings");

  std::string cls, left, right, perm, map, terms_file;
  int max_n = 0, n = 0, param = 0, k = 0, order = 0, deg_f = 0, deg_z = 0, margin = kDefaultGuessMargin;
  bool sweep = false;

  auto* count = app.add_subcommand("count", "Count sequence |Av_n(S)| for n = 0..N");
  count->add_option("--class", cls, "Pattern set descriptor")->required();
  count->add_option("--max-n", max_n, "Largest n")->required();

  auto* list = app.add_subcommand("list", "List Av_n(S) in lexicographic order");
  list->add_option("--class", cls)->required();
  list->add_option("--n", n)->required();

  auto* check = app.add_subcommand("check", "Does a permutation avoid a pattern set?");
  check->add_option("--perm", perm)->required();
  check->add_option("--class", cls)->required();

  auto* biject = app.add_subcommand("biject", "Apply g, g-inv, h or h-inv to a permutation");
  biject->add_option("--map", map)->required()->check(CLI::IsMember({"g", "g-inv", "h", "h-inv"}));
  biject->add_option("--param", param, "l for g, k for h")->required();
  biject->add_option("--perm", perm)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive verification");
  verify->require_subcommand(1);
  auto* wilf = verify->add_subcommand("wilf", "Compare two count sequences");
  wilf->add_option("--left", left)->required();
  wilf->add_option("--right", right)->required();
  wilf->add_option("--max-n", max_n)->required();
  auto* sandwich = verify->add_subcommand("sandwich", "Binomial-sum bounds for A:k");
  sandwich->add_option("--k", k)->required();
  sandwich->add_option("--max-n", max_n)->required();
  auto* bijection = verify->add_subcommand("bijection", "Exhaustive bijectivity of g or h");
  bijection->add_option("--map", map)->required()->check(CLI::IsMember({"g", "h"}));
  bijection->add_option("--param", param)->required();
  bijection->add_option("--max-n", max_n)->required();

  auto* series = app.add_subcommand("series", "Exact series");
  series->require_subcommand(1);
  auto* a44 = series->add_subcommand("a44", "Coefficients of the A:4 generating function");
  a44->add_option("--order", order)->required();

  auto* guess = app.add_subcommand("guess", "Search for an algebraic relation");
  guess->add_option("--terms", terms_file, "Term file, one integer per line")->required();
  guess->add_option("--deg-f", deg_f, "Degree in F")->required();
  guess->add_option("--deg-z", deg_z, "Degree in z")->required();
  guess->add_option("--margin", margin, "Surplus equations required");
  guess->add_flag("--sweep", sweep, "Treat the degrees as bounds and search every box the terms support");

  auto* report = app.add_subcommand("report", "Reports without pass/fail");
  report->require_subcommand(1);
  auto* growth = report->add_subcommand("growth", "Growth diagnostics for A:k");
  growth->add_option("--k", k)->required();
  growth->add_option("--max-n", max_n)->required();
  auto* rlmax = report->add_subcommand("rlmax", "Right-to-left-maxima profiles");
  rlmax->add_option("--left", left)->required();
  rlmax->add_option("--right", right)->required();
  rlmax->add_option("--n", n)->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidArguments;
  }

  config.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  else if (const char* env = std::getenv("PAVANE_CACHE"); env && *env) config.cache_dir = env;

  try {
    Runner run(config, out, err);
    if (count->parsed()) return run.count(cls, max_n);
    if (list->parsed()) return run.list(cls, n);
    if (check->parsed()) return run.check(perm, cls);
    if (biject->parsed()) return run.biject(map, param, perm);
    if (wilf->parsed()) return run.verify_wilf(left, right, max_n);
    if (sandwich->parsed()) return run.verify_sandwich(k, max_n);
    if (bijection->parsed()) return run.verify_bijection(map, param, max_n);
    if (a44->parsed()) return run.series_a44(order);
    if (guess->parsed()) return run.guess(terms_file, deg_f, deg_z, margin, sweep);
    if (growth->parsed()) return run.report_growth(k, max_n);
    if (rlmax->parsed()) return run.report_rlmax(left, right, n);
    err << "no command given\n";
    return kInvalidArguments;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCeilingExceeded;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kCacheFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace pavane::cli
