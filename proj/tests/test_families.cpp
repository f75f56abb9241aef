// Brute-force distribution polynomials: small-rank closed forms computed by
// hand, structural symmetries, closed-formula helpers, and deterministic
// parallel accumulation.

#include <catch2/catch_amalgamated.hpp>

#include "eulab/families.hpp"

using namespace eulab;

namespace {

MPoly v(const char* name, int exp = 1) { return MPoly::variable(name, exp); }

Rational coeff_sum(const MPoly& p) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) total += c;
  return total;
}

}  // namespace

TEST_CASE("rank-one and rank-two closed forms") {
  // over S_2: the ascent comes with both records for 12, neither for 21
  CHECK(a_poly(1) == v("x") * v("alpha") + v("y") * v("beta"));
  CHECK(p_poly(1) == v("alpha") * v("u4") + v("beta") * v("u3"));
  MPoly p2 = v("u3", 2) * v("beta", 2) + v("u4", 2) * v("alpha", 2) +
             Rational(2) * v("u3") * v("u4") * v("alpha") * v("beta") +
             v("u1") * v("u2") * (v("alpha") + v("beta"));
  CHECK(p_poly(2) == p2);
}

TEST_CASE("minimum-record variants coincide via complementation") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(a_poly(n) == a_poly_min(n));
    CHECK(p_poly(n) == p_poly_min(n));
  }
}

TEST_CASE("P-polynomials involve u1, u2 only through their product") {
  int iu1 = var_index("u1"), iu2 = var_index("u2");
  for (int n = 1; n <= 5; ++n) {
    MPoly p = p_poly(n);
    for (const auto& [m, c] : p.terms()) CHECK(m.exponent(iu1) == m.exponent(iu2));
  }
}

TEST_CASE("classical families") {
  // ascent-count convention with the +1 shift: row 3 is x + 4x^2 + x^3
  CHECK(classical_eulerian(0) == MPoly::constant(1));
  CHECK(classical_eulerian(1) == v("x"));
  CHECK(classical_eulerian(3) == v("x") + Rational(4) * v("x", 2) + v("x", 3));
  CHECK(rising_factorial(0) == MPoly::constant(1));
  CHECK(rising_factorial(3) == v("x", 3) + Rational(3) * v("x", 2) + Rational(2) * v("x"));
  CHECK(rising_factorial(2, "alpha") == v("alpha", 2) + v("alpha"));
  CHECK(brenti_a(2) == v("q", 2) + v("x") * v("q"));
}

TEST_CASE("zigzag numbers") {
  long long expect[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  for (int n = 0; n <= 9; ++n) CHECK(euler_number(n) == expect[n]);
}

TEST_CASE("explicit binomial formula, smallest case") {
  CHECK(explicit_main2ca(1) ==
        v("alpha") * v("u4") - v("u3") - v("alpha") * v("u3"));
  // must agree with the brute-force polynomial specialized to beta = -1-alpha
  MPoly lhs = p_poly_min(1).subst("beta", MPoly::constant(-1) - v("alpha"));
  CHECK(lhs == explicit_main2ca(1));
}

TEST_CASE("closed enumeration collapses") {
  MPoly u = v("u");
  CHECK(closed_enumer("pk", 1) == MPoly::constant(-1));
  CHECK(closed_enumer("pk", 2) == MPoly::constant(1) - u);
  CHECK(closed_enumer("lpk", 1) == MPoly::constant(-1));
  CHECK(closed_enumer("rda", 1) == -(MPoly::constant(1) + u));
  CHECK_THROWS_AS(closed_enumer("nope", 1), UnknownId);
}

TEST_CASE("joint distributions") {
  using enum StatId;
  // Eulerian numbers over S_4 via descents
  MPoly d = joint_dist({{{des, "x"}}, GroundSet::sym, 4});
  CHECK(d == MPoly::constant(1) + Rational(11) * v("x") + Rational(11) * v("x", 2) +
                 v("x", 3));
  // ground set sym_plus_1 enumerates S_{n+1}
  CHECK(coeff_sum(joint_dist({{{des, "x"}}, GroundSet::sym_plus_1, 3})) == 24);
  // negative offsets throw when a statistic dips below the offset
  CHECK_THROWS_AS(joint_dist({{{des, "x", -1}}, GroundSet::sym, 3}), OffsetUnderflow);
  // restricted ground sets
  CHECK(coeff_sum(joint_dist({{{exc, "x"}}, GroundSet::derangements, 4})) == 9);
  CHECK(coeff_sum(joint_dist({{{des, "x"}}, GroundSet::down_up, 4})) == 5);
  CHECK(coeff_sum(joint_dist({{{des, "x"}}, GroundSet::up_down, 4})) == 5);
}

TEST_CASE("parallel accumulation is deterministic") {
  using enum StatId;
  DistSpec spec{{{des, "x"}, {LRmax, "alpha"}, {exc, "y"}}, GroundSet::sym, 7};
  CHECK(joint_dist(spec, 4) == joint_dist(spec, 1));
  CHECK(a_poly(5, 3) == a_poly(5));
  CHECK(p_poly(5, 3) == p_poly(5));
  auto t4 = stat_table(6, 4), t1 = stat_table(6, 1);
  for (int i = 0; i < kStatCount; ++i) CHECK(t4[i] == t1[i]);
  // exceptions from workers surface on the caller
  CHECK_THROWS_AS(joint_dist({{{des, "x", -1}}, GroundSet::sym, 5}, 4), OffsetUnderflow);
}

TEST_CASE("statistic table") {
  auto table = stat_table(4);
  // des row = Eulerian numbers, asc row mirrors it
  CHECK(table[static_cast<int>(StatId::des)] ==
        MPoly::constant(1) + Rational(11) * v("x") + Rational(11) * v("x", 2) + v("x", 3));
  CHECK(table[static_cast<int>(StatId::asc)] == table[static_cast<int>(StatId::des)]);
  // five record/cycle statistics share the Stirling distribution
  for (StatId s :
       {StatId::cyc, StatId::LRmax, StatId::RLmax, StatId::LRmin, StatId::RLmin})
    CHECK(table[static_cast<int>(s)] == rising_factorial(4));
  // every row's coefficients sum to 4!
  for (int i = 0; i < kStatCount; ++i) {
    Rational total = 0;
    for (const auto& [m, c] : table[i].terms()) total += c;
    CHECK(total == 24);
  }
}

TEST_CASE("grouped distributions") {
  using enum StatId;
  auto groups = grouped_dist(GroundSet::sym, 4, {des});
  CHECK(groups == std::map<std::vector<int>, long long>{
                      {{0}, 1}, {{1}, 11}, {{2}, 11}, {{3}, 1}});
  // multi-key totals
  long long total = 0;
  for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, 5, {ipk, LRmin, RLmin}))
    total += cnt;
  CHECK(total == 120);
  long long dtotal = 0;
  for (const auto& [key, cnt] : grouped_dist(GroundSet::derangements, 4, {exc}))
    dtotal += cnt;
  CHECK(dtotal == 9);
}

TEST_CASE("ground admission predicates") {
  auto admits = [](GroundSet g, std::initializer_list<int> w) {
    std::vector<int> v(w);
    return ground_admits(g, v);
  };
  CHECK(admits(GroundSet::sym, {2, 1, 3}));
  CHECK(admits(GroundSet::sym_plus_1, {2, 1, 3}));
  CHECK(admits(GroundSet::derangements, {2, 1}));
  CHECK_FALSE(admits(GroundSet::derangements, {1, 2}));
  CHECK(admits(GroundSet::down_up, {2, 1, 4, 3}));
  CHECK_FALSE(admits(GroundSet::down_up, {1, 2, 4, 3}));
  CHECK(admits(GroundSet::up_down, {1, 3, 2, 4}));
  CHECK_FALSE(admits(GroundSet::up_down, {3, 1, 2, 4}));
}
