// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
//
//   1  worked-example statistic values
//   2  Stirling distribution of the five record/cycle statistics, n <= 8
//   3  generating-function suite (15 builders), symbolic, n <= 7
//   4  grammar suite incl. fault injection
//   5  explicit closed formulas
//   6  relation suite (14 identities), n <= 7
//   7  sign identities and zigzag numbers
//   8  20-statistic table over S_10, parallel determinism
//   9  byte-identical verification reports (via the CLI when its path is given)
//
// Usage: acceptance [path-to-eulab-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eulab/eulab.hpp"

using namespace eulab;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool pass, const std::string& what, double secs) {
  std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool suite_passes(const std::vector<std::string>& ids, int n_max, std::string* why) {
  CheckConfig cfg;
  cfg.ids = ids;
  cfg.n_max = n_max;
  Report rep = run_suite(cfg);
  for (const auto& r : rep.checks)
    if (r.status == "fail") {
      *why = r.id + " at n=" + std::to_string(r.n);
      return false;
    }
  return true;
}

void criterion1() {
  Timer t;
  bool ok = true;
  auto expect = [&](const Permutation& p, StatId s, int want) {
    if (p.statistic(s) != want) ok = false;
  };
  Permutation p1 = Permutation::from_string("2 7 1 8 3 6 5 4");
  expect(p1, StatId::cyc, 3);
  expect(p1, StatId::LRmax, 3);
  expect(p1, StatId::LRmin, 2);
  expect(p1, StatId::RLmax, 4);
  expect(p1, StatId::RLmin, 3);
  Permutation p2 = Permutation::from_string("7 1 3 8 5 9 6 2 4");
  expect(p2, StatId::lpk, 3);
  expect(p2, StatId::ipk, 2);
  expect(p2, StatId::epk, 4);
  expect(p2, StatId::val, 3);
  expect(p2, StatId::da, 1);
  expect(p2, StatId::lda, 1);
  expect(p2, StatId::rda, 2);
  expect(p2, StatId::lrda, 2);
  expect(p2, StatId::dd, 1);
  expect(p2, StatId::ldd, 2);
  expect(p2, StatId::rdd, 1);
  expect(p2, StatId::lrdd, 2);
  report(1, ok, "worked-example statistics", t.seconds());
}

void criterion2() {
  Timer t;
  std::string why;
  bool ok = suite_passes({"stirling-all"}, 8, &why);
  report(2, ok, ok ? "five statistics carry the Stirling distribution for n <= 8"
                   : "stirling distribution failed: " + why,
         t.seconds());
}

void criterion3() {
  Timer t;
  std::string why;
  bool ok = suite_passes(
      {"cs-gf", "main2c", "cor-lpk-des", "gf-pk-thm", "gf-lrda", "gf-da", "gf-pk-lr", "gf-rda",
       "gf-lpk-gessel", "gf-pk-davidbarton", "zhuang-da", "zhuang-rda", "zhuang-lrda",
       "gf-brenti", "stirling-special"},
      7, &why);
  double secs = t.seconds();
  if (ok && secs > 120) {
    ok = false;
    why = "exceeded 2-minute budget";
  }
  report(3, ok,
         ok ? "15 generating-function builders match brute force symbolically for n <= 7"
            : "generating-function suite failed: " + why,
         secs);
}

void criterion4() {
  Timer t;
  std::string why;
  bool ok = suite_passes({"grammar-g1", "grammar-P"}, 7, &why) &&
            suite_passes({"grammar-claim", "grammar-gen-u1"}, 8, &why) &&
            suite_passes({"labeling-insertion"}, 6, &why);
  if (ok) {
    Grammar broken = grammar_gtilde();
    broken.rule("u3", MPoly::variable("u1"));
    if (verify_insertion_cases(2, broken)) {
      ok = false;
      why = "fault injection was not detected";
    }
  }
  double secs = t.seconds();
  if (ok && secs > 60) {
    ok = false;
    why = "exceeded 1-minute budget";
  }
  report(4, ok,
         ok ? "grammar derivatives, subring claim, Laurent identity, series "
              "multiplicativity, insertion encoding and fault injection"
            : "grammar suite failed: " + why,
         secs);
}

void criterion5() {
  Timer t;
  std::string why;
  bool ok = suite_passes({"main2ca", "main2cacor3"}, 6, &why) &&
            suite_passes({"enumer-pk", "enumer-lpk", "enumer-rda"}, 7, &why);
  report(5, ok,
         ok ? "explicit binomial and collapse formulas match brute force"
            : "explicit-formula suite failed: " + why,
         t.seconds());
}

void criterion6() {
  Timer t;
  std::string why;
  bool ok = suite_passes(
      {"main2-cora", "main2-corb-1", "main2-corb-2", "stembridge", "stembridge-ab",
       "leftpk-stembridge", "leftpk-stembridge-ab", "petersen", "petersen-beta", "petersen-pk",
       "main-coraa", "zhuang-pk-ex", "zhuang-lpk-ex", "main2-coraathm"},
      7, &why);
  double secs = t.seconds();
  if (ok && secs > 180) {
    ok = false;
    why = "exceeded 3-minute budget";
  }
  report(6, ok,
         ok ? "14 relation identities hold for n <= 7 (symbolic or 5 rational points)"
            : "relation suite failed: " + why,
         secs);
}

void criterion7() {
  Timer t;
  std::string why;
  bool ok = suite_passes({"euler-sign", "roselle"}, 9, &why) &&
            suite_passes({"roselle-varia", "derangement-identity"}, 8, &why) &&
            suite_passes({"alt-updown", "alt-downup"}, 7, &why);
  if (ok) {
    Series tn = gf_tan(9), sc = gf_sec(9);
    for (int n = 1; n <= 9 && ok; ++n) {
      MPoly want = MPoly::constant(Rational(euler_number(n)));
      if (!(egf_coeff(n % 2 ? tn : sc, n) == want)) {
        ok = false;
        why = "zigzag number mismatch at n=" + std::to_string(n);
      }
    }
  }
  double secs = t.seconds();
  if (ok && secs > 120) {
    ok = false;
    why = "exceeded 2-minute budget";
  }
  report(7, ok,
         ok ? "sign identities for n <= 9/8, orientation reports for n <= 7, zigzag "
              "numbers match tan/sec coefficients"
            : "sign suite failed: " + why,
         secs);
}

void criterion8() {
  Timer t;
  auto par = stat_table(10, 8);
  double build_secs = t.seconds();
  auto seq = stat_table(10, 2);
  bool same = true;
  for (int i = 0; i < kStatCount; ++i)
    if (!(par[i] == seq[i])) same = false;
  bool ok = same && build_secs <= 300;
  char what[128];
  if (!same)
    std::snprintf(what, sizeof what, "parallel statistic table differs between thread counts");
  else if (build_secs > 300)
    std::snprintf(what, sizeof what, "S_10 table exceeded the 5-minute budget");
  else
    std::snprintf(what, sizeof what,
                  "20-statistic table over S_10 in %.1fs, identical across thread counts",
                  build_secs);
  report(8, ok, what, t.seconds());
}

void criterion9(const char* cli_path) {
  Timer t;
  bool ok = false;
  std::string what;
  if (cli_path) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path out1 = dir / "eulab_accept_report1.json";
    fs::path out2 = dir / "eulab_accept_report2.json";
    std::string base = std::string(cli_path) +
                       " verify --n-max 5 --seed 2026 --json ";
    int rc1 = std::system((base + out1.string() + " > /dev/null").c_str());
    int rc2 = std::system((base + out2.string() + " > /dev/null").c_str());
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };
    std::string a = slurp(out1), b = slurp(out2);
    ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    what = ok ? "two CLI verification runs produced byte-identical reports"
              : "CLI verification reports differ or a run failed";
    fs::remove(out1);
    fs::remove(out2);
  } else {
    CheckConfig cfg;
    cfg.seed = 2026;
    std::string a = report_to_json(run_suite(cfg)).dump(2);
    std::string b = report_to_json(run_suite(cfg)).dump(2);
    ok = !a.empty() && a == b && run_suite(cfg).all_passed();
    what = ok ? "two in-process verification runs produced byte-identical reports"
              : "verification reports differ between identical runs";
  }
  report(9, ok, what, t.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(argc > 1 ? argv[1] : nullptr);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 9 acceptance criteria passed\n");
  return 0;
}
