// eulab — exact-arithmetic toolkit for descent-statistic polynomial identities.
//
// Subcommands:
//   verify   run identity checks (symbolic or rational-point mode), report JSON
//   stats    print all 20 statistics of one permutation as JSON
//   table    emit coefficient tables for polynomial families (csv or json)
//   grammar  apply the formal derivative of a named grammar to a word
//   series   print truncated series coefficients of a named builder
//
// Exit codes: 0 success / all checks pass, 1 any check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulab/eulab.hpp"

namespace {

using namespace eulab;

int to_exit_usage(const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return 2;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const std::vector<std::string>& ids, int n_max, const std::string& mode,
               int points, std::uint64_t seed, int threads, const std::string& json_path,
               bool timings, bool list_only) {
  if (list_only) {
    for (const auto& info : registry()) {
      std::printf("%-22s n<=%d%s%s  %s\n", info.id.c_str(), info.n_max,
                  info.symbolic_capable ? " sym" : "    ",
                  info.points_capable ? " pts" : "    ", info.description.c_str());
    }
    return 0;
  }
  CheckConfig cfg;
  cfg.ids = ids;
  cfg.n_max = n_max;
  cfg.points = points;
  cfg.seed = seed;
  cfg.threads = threads;
  cfg.timings = timings;
  if (mode == "symbolic")
    cfg.mode = RunMode::symbolic;
  else if (mode == "points")
    cfg.mode = RunMode::points;
  else
    cfg.mode = RunMode::preferred;

  Report rep;
  try {
    rep = run_suite(cfg);
  } catch (const UnknownCheck& e) {
    return to_exit_usage(e);
  }

  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : rep.checks) {
    if (r.status == "pass") ++pass;
    else if (r.status == "fail") ++fail;
    else ++skip;
  }
  // With the report going to stdout, keep the human summary on stderr so the
  // stream stays parseable.
  std::FILE* text_out = json_path == "-" ? stderr : stdout;
  for (const auto& r : rep.checks) {
    if (r.status == "fail")
      std::fprintf(text_out, "FAIL %-22s n=%d (%s): %s\n", r.id.c_str(), r.n, r.mode.c_str(),
                   r.detail.dump().c_str());
  }
  std::fprintf(text_out, "checks: %zu  pass: %d  fail: %d  skipped: %d\n", rep.checks.size(),
               pass, fail, skip);

  if (!json_path.empty()) {
    std::string text = report_to_json(rep).dump(2);
    text += '\n';
    if (json_path == "-") {
      std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open '" << json_path << "' for writing\n";
        return 2;
      }
      out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
  }
  return rep.all_passed() ? 0 : 1;
}

// ----------------------------------------------------------------- stats ---

int cmd_stats(const std::string& text) {
  Permutation p;
  try {
    p = Permutation::from_string(text);
  } catch (const std::exception& e) {
    return to_exit_usage(e);
  }
  Json j;
  j["perm"] = p.values();
  j["n"] = p.n();
  Json stats = Json::object();
  auto vals = p.all_statistics();
  for (int i = 0; i < kStatCount; ++i) stats[kStatNames[i]] = vals[i];
  j["stats"] = std::move(stats);
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------------- table ---

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return std::pair{n, n};
    }
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    if (a > b) return std::nullopt;
    return std::pair{a, b};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<StatId> stat_by_name(const std::string& name) {
  for (int i = 0; i < kStatCount; ++i)
    if (name == kStatNames[i]) return static_cast<StatId>(i);
  return std::nullopt;
}

std::string monomial_str(const Monomial& m) {
  if (m.entries().empty()) return "1";
  std::string s;
  for (const auto& [v, ex] : m.entries()) {
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (ex != 1) s += '^' + std::to_string(ex);
  }
  return s;
}

int cmd_table(const std::string& family, const std::string& range_text,
              const std::string& format, int threads) {
  auto range = parse_range(range_text);
  if (!range) {
    std::cerr << "error: --n-range must be 'a..b' or a single integer\n";
    return 2;
  }
  auto [lo, hi] = *range;
  if (lo < 0) {
    std::cerr << "error: n must be nonnegative\n";
    return 2;
  }

  std::function<MPoly(int)> make;
  if (family == "A") {
    make = [&](int n) { return a_poly(n, threads); };
  } else if (family == "P") {
    make = [&](int n) { return p_poly(n, threads); };
  } else if (family == "eulerian") {
    make = [](int n) { return classical_eulerian(n); };
  } else if (family == "rising") {
    make = [](int n) { return rising_factorial(n, "x"); };
  } else if (family == "brenti") {
    make = [](int n) { return brenti_a(n); };
  } else if (auto s = stat_by_name(family)) {
    make = [&, s](int n) {
      return joint_dist({{{*s, "x"}}, GroundSet::sym, n}, threads);
    };
  } else {
    std::cerr << "error: unknown family '" << family
              << "' (expected A, P, eulerian, rising, brenti, or a statistic name)\n";
    return 2;
  }
  if ((family == "A" || family == "P") && lo < 1) {
    std::cerr << "error: family " << family << " starts at n=1\n";
    return 2;
  }

  std::vector<std::pair<int, MPoly>> rows;
  try {
    for (int n = lo; n <= hi; ++n) rows.emplace_back(n, make(n));
  } catch (const std::exception& e) {
    return to_exit_usage(e);
  }

  if (format == "json") {
    Json j;
    j["family"] = family;
    j["rows"] = Json::array();
    for (const auto& [n, poly] : rows) {
      Json row;
      row["n"] = n;
      row["poly"] = mpoly_to_json(poly);
      j["rows"].push_back(std::move(row));
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,monomial,coefficient\n";
    for (const auto& [n, poly] : rows)
      for (const auto& [m, c] : poly.terms())
        std::cout << n << "," << monomial_str(m) << "," << rational_to_string(c) << "\n";
  } else {
    std::cerr << "error: --format must be csv or json\n";
    return 2;
  }
  return 0;
}

// --------------------------------------------------------------- grammar ---

// Words are '*'-separated factors `name` or `name^exp` (exp may be negative).
MPoly parse_word(const std::string& text) {
  MPoly result = MPoly::constant(1);
  std::string word = text;
  size_t pos = 0;
  while (pos < word.size()) {
    size_t star = word.find('*', pos);
    std::string factor = word.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? word.size() : star + 1;
    // trim spaces
    while (!factor.empty() && factor.front() == ' ') factor.erase(factor.begin());
    while (!factor.empty() && factor.back() == ' ') factor.pop_back();
    if (factor.empty()) throw ParseError("empty factor in word '" + text + "'");
    int exp = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      exp = std::stoi(factor.substr(caret + 1));
      factor = factor.substr(0, caret);
    }
    result *= MPoly::term(Monomial::from_entries({{var_index(factor), exp}}), Rational(1));
  }
  return result;
}

int cmd_grammar(const std::string& id, const std::string& word_text, int power, bool as_json) {
  Grammar g;
  MPoly word;
  try {
    g = named_grammar(id);
    word = parse_word(word_text);
  } catch (const std::exception& e) {
    return to_exit_usage(e);
  }
  const MPoly& out = g.d_pow(word, power);
  if (as_json) {
    Json j;
    j["grammar"] = id;
    j["word"] = word_text;
    j["power"] = power;
    j["result"] = mpoly_to_json(out);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- series ---

int cmd_series(const std::string& name, int order, bool as_json) {
  const auto& builders = series_builders();
  auto it = builders.find(name);
  if (it == builders.end()) {
    std::cerr << "error: unknown series '" << name << "'; available:";
    for (const auto& [k, v] : builders) std::cerr << " " << k;
    std::cerr << "\n";
    return 2;
  }
  Series f = it->second(order);
  if (as_json) {
    Json j;
    j["name"] = name;
    j["order"] = order;
    j["coeffs"] = Json::array();
    for (int k = 0; k <= f.order(); ++k) j["coeffs"].push_back(mpoly_to_json(f.coeff(k)));
    std::cout << j.dump(2) << "\n";
  } else {
    for (int k = 0; k <= f.order(); ++k)
      std::cout << "t^" << k << ": " << f.coeff(k).str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for descent-statistic polynomial identities"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity checks and report results");
  std::vector<std::string> ids;
  int n_max = 0;
  std::string mode = "preferred";
  int points = 5;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string json_path;
  bool timings = false, list_only = false;
  verify->add_option("--theorem", ids, "check id (repeatable; default: all)");
  verify->add_option("--n-max", n_max, "override per-check maximum n");
  verify->add_option("--mode", mode, "preferred|symbolic|points")
      ->check(CLI::IsMember({"preferred", "symbolic", "points"}));
  verify->add_option("--points", points, "rational sample points per n (points mode)");
  verify->add_option("--seed", seed, "RNG seed for point sampling");
  verify->add_option("--threads", threads, "worker threads inside enumerations");
  verify->add_option("--json", json_path, "write report JSON to this path ('-' for stdout)");
  verify->add_flag("--timings", timings, "record wall-clock times (off: elapsed_ms stays 0)");
  verify->add_flag("--list", list_only, "list the check catalog and exit");

  // stats
  auto* stats = app.add_subcommand("stats", "print all 20 statistics of a permutation");
  std::string perm_text;
  stats->add_option("--perm", perm_text, "one-line permutation, e.g. \"7 1 3 8 5 9 6 2 4\"")
      ->required();

  // table
  auto* table = app.add_subcommand("table", "emit coefficient tables for polynomial families");
  std::string family, range_text, format = "csv";
  int table_threads = 1;
  table->add_option("--family", family,
                    "A|P|eulerian|rising|brenti or a statistic name (des, ipk, ...)")
      ->required();
  table->add_option("--n-range", range_text, "n range 'a..b' or single n")->required();
  table->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--threads", table_threads, "worker threads");

  // grammar
  auto* grammar = app.add_subcommand("grammar", "formal grammar derivative of a word");
  std::string gid, word_text;
  int power = 1;
  bool gjson = false;
  grammar->add_option("--id", gid, "G1|Gtilde|Gtilde1")->required();
  grammar->add_option("--word", word_text, "'*'-separated factors, e.g. \"u1*u2^-1\"")
      ->required();
  grammar->add_option("--power", power, "derivative order n (default 1)");
  grammar->add_flag("--json", gjson, "emit JSON");

  // series
  auto* series = app.add_subcommand("series", "truncated series coefficients of a builder");
  std::string sname;
  int order = 6;
  bool sjson = false;
  series->add_option("--name", sname, "builder name (see error message for the list)")
      ->required();
  series->add_option("--order", order, "truncation order in t");
  series->add_flag("--json", sjson, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
  }

  try {
    if (verify->parsed())
      return cmd_verify(ids, n_max, mode, points, seed, threads, json_path, timings, list_only);
    if (stats->parsed()) return cmd_stats(perm_text);
    if (table->parsed()) return cmd_table(family, range_text, format, table_threads);
    if (grammar->parsed()) return cmd_grammar(gid, word_text, power, gjson);
    if (series->parsed()) return cmd_series(sname, order, sjson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
