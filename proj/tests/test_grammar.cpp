// Formal-derivative grammar calculus: operator laws, the three named
// grammars, the insertion labeling, and the balanced-subring rewrite.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eulab/grammar.hpp"

using namespace eulab;

namespace {

MPoly v(const char* name, int exp = 1) { return MPoly::variable(name, exp); }

MPoly random_word_poly(std::mt19937_64& rng) {
  static const char* vars[] = {"u1", "u2", "u3", "u4", "a", "b"};
  std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), expo(-2, 2), which(0, 5);
  MPoly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::map<int, int> exps;
    for (int i = 0, nv = which(rng); i < nv; ++i) exps[var_index(vars[which(rng)])] = expo(rng);
    std::vector<Monomial::Entry> entries;
    for (auto [var, e] : exps)
      if (e != 0) entries.emplace_back(var, e);
    p.add_term(Monomial::from_entries(std::move(entries)), Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("derivative operator laws") {
  std::mt19937_64 rng(555);
  Grammar g = grammar_gtilde();
  for (int trial = 0; trial < 60; ++trial) {
    MPoly p = random_word_poly(rng), q = random_word_poly(rng);
    CHECK(g.d(p + q) == g.d(p) + g.d(q));               // linearity
    CHECK(g.d(p * q) == g.d(p) * q + p * g.d(q));       // Leibniz
  }
  CHECK(g.d(MPoly::constant(5)).is_zero());
  CHECK(g.d(v("x")).is_zero());  // unruled variables are constants
}

TEST_CASE("derivative of negative powers") {
  Grammar g = grammar_gtilde1();
  // D(w^e) = e w^(e-1) D(w) for all integer e, checked on w = u1
  MPoly du1 = v("u1") * v("u3");
  for (int e : {-3, -1, 1, 2}) {
    MPoly we = v("u1", e);
    MPoly expect = v("u1", e - 1) * du1 * Rational(e);
    CHECK(g.d(we) == expect);
  }
  // the Laurent word u1/u2 differentiates to (u1/u2)(u3 - u4)
  MPoly ratio = MPoly::term(
      Monomial::from_entries({{var_index("u1"), 1}, {var_index("u2"), -1}}), 1);
  CHECK(g.d(ratio) == ratio * (v("u3") - v("u4")));
  CHECK(g.d_pow(ratio, 3) == ratio * (v("u3") - v("u4")).pow_int(3));
}

TEST_CASE("derivative ladder") {
  Grammar g = grammar_g1();
  MPoly y = v("y");
  CHECK(g.d_pow(y, 0) == y);
  for (int n = 1; n <= 6; ++n) CHECK(g.d_pow(y, n) == g.d(g.d_pow(y, n - 1)));
  CHECK_THROWS_AS(g.d_pow(y, -1), std::invalid_argument);
}

TEST_CASE("named grammar catalog") {
  CHECK(named_grammar("G1").rules().size() == 2);
  CHECK(named_grammar("Gtilde").rules().size() == 6);
  CHECK(named_grammar("Gtilde1").rules().size() == 4);
  CHECK_THROWS_AS(named_grammar("nope"), UnknownGrammar);

  Grammar g1 = grammar_g1();
  MPoly xy = v("x") * v("y");
  CHECK(g1.d(v("x")) == xy);
  CHECK(g1.d(v("y")) == xy);
  CHECK(g1.d(v("y")) == g1.d_pow(v("y"), 1));

  Grammar gt = grammar_gtilde();
  CHECK(gt.d(v("a") * v("b")) ==
        v("a") * v("b") * (v("alpha") * v("u4") + v("beta") * v("u3")));
}

TEST_CASE("generating series") {
  Grammar g = grammar_g1();
  MPoly y = v("y");
  Series s = g.gen(y, 5);
  for (int k = 0; k <= 5; ++k)
    CHECK(s.coeff(k) * Rational(factorial(k)) == g.d_pow(y, k));
  // multiplicativity on a product word
  Series prod = g.gen(v("x") * v("y"), 5);
  CHECK(prod == mul(g.gen(v("x"), 5), g.gen(v("y"), 5)));
}

TEST_CASE("labeling weight of the running example") {
  Permutation p = Permutation::from_one_line({7, 1, 2, 8, 3, 6, 5, 4});
  MPoly expect = v("a") * v("b") * (v("u1") * v("u2")).pow_int(2) * v("u3") *
                 v("u4", 2) * v("alpha") * v("beta", 3);
  CHECK(labeling_weight(p) == expect);
  CHECK_THROWS_AS(labeling_weight(Permutation()), std::invalid_argument);
}

TEST_CASE("insertion of a new maximum") {
  Permutation p = Permutation::from_one_line({2, 1, 3});
  CHECK(insert_max(p, 1) == Permutation::from_one_line({4, 2, 1, 3}));
  CHECK(insert_max(p, 3) == Permutation::from_one_line({2, 1, 4, 3}));
  CHECK(insert_max(p, 4) == Permutation::from_one_line({2, 1, 3, 4}));
}

TEST_CASE("insertion encoding matches the grammar derivative") {
  for (int n = 1; n <= 5; ++n) CHECK(verify_insertion_cases(n));
}

TEST_CASE("insertion verifier fails under fault injection") {
  Grammar broken = grammar_gtilde();
  broken.rule("u3", v("u1"));  // corrupt one production
  CHECK_FALSE(verify_insertion_cases(2, broken));
}

TEST_CASE("balanced-subring rewrite") {
  Grammar g = grammar_gtilde1();
  Grammar g1 = grammar_g1();
  MPoly e = v("u1") * v("u2");
  MPoly xy = v("x") * v("y");
  for (int n = 0; n <= 5; ++n) {
    auto rw = rewrite_balanced_es(g.d_pow(e, n));
    REQUIRE(rw.has_value());
    CHECK(*rw == g1.d_pow(xy, n));
  }
  // unbalanced u1/u2 degrees
  CHECK_FALSE(rewrite_balanced_es(v("u1")).has_value());
  // balanced but carrying a variable outside u3, u4
  CHECK_FALSE(rewrite_balanced_es(v("u1") * v("u2") * v("alpha")).has_value());
  // balanced, inside u3/u4, but not a polynomial in u3 + u4
  CHECK_FALSE(rewrite_balanced_es(v("u3")).has_value());
  // a genuine element of the subring maps e -> xy, (u3+u4) -> (x+y)
  MPoly s = v("u3") + v("u4");
  auto rw = rewrite_balanced_es(e * s.pow_int(2) + s);
  REQUIRE(rw.has_value());
  CHECK(*rw == xy * (v("x") + v("y")).pow_int(2) + (v("x") + v("y")));
}
