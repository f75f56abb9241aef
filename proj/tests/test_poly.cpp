// Ring, evaluation, substitution, exact division and serialization behavior
// of the sparse multivariate Laurent polynomial type.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "eulab/mpoly.hpp"
#include "eulab/mpoly_json.hpp"

using namespace eulab;

namespace {

MPoly random_poly(std::mt19937_64& rng, bool laurent = false) {
  static const char* vars[] = {"x", "y", "alpha", "u2"};
  std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), expo(laurent ? -2 : 0, 3),
      which(0, 3);
  MPoly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::map<int, int> exps;
    int nv = which(rng);
    for (int i = 0; i < nv; ++i) exps[var_index(vars[which(rng)])] = expo(rng);
    std::vector<Monomial::Entry> entries;
    for (auto [v, e] : exps)
      if (e != 0) entries.emplace_back(v, e);
    p.add_term(Monomial::from_entries(std::move(entries)), Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("factories and trivial identities") {
  CHECK(MPoly::zero().is_zero());
  CHECK(MPoly::constant(0).is_zero());
  CHECK(MPoly::term(Monomial::variable(var_index("x"), 3), 0).is_zero());
  CHECK(MPoly::constant(7).constant_value() == 7);
  CHECK(MPoly::variable("x").term_count() == 1);
  CHECK(MPoly::variable("x", 0) == MPoly::constant(1));

  MPoly x = MPoly::variable("x");
  CHECK(x + MPoly::zero() == x);
  CHECK(x - x == MPoly::zero());
  CHECK(x * MPoly::constant(1) == x);
  CHECK(x * MPoly::zero() == MPoly::zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20251204);
  for (int trial = 0; trial < 200; ++trial) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MPoly::zero());
    CHECK(-(-a) == a);
  }
}

TEST_CASE("pow_int agrees with repeated multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly a = random_poly(rng);
    MPoly acc = MPoly::constant(1);
    for (int k = 0; k <= 5; ++k) {
      CHECK(a.pow_int(k) == acc);
      acc *= a;
    }
  }
  CHECK(MPoly::zero().pow_int(0) == MPoly::constant(1));
  CHECK_THROWS_AS(MPoly::variable("x").pow_int(-1), std::invalid_argument);
}

TEST_CASE("graded-lex term order is canonical") {
  MPoly p = MPoly::variable("x") + MPoly::variable("y", 2) + MPoly::constant(3);
  // ascending: 3 < x < y^2 (degree first)
  auto it = p.terms().begin();
  CHECK(it->first.is_unit());
  ++it;
  CHECK(it->first == Monomial::variable(var_index("x"), 1));
  ++it;
  CHECK(it->first == Monomial::variable(var_index("y"), 2));
  CHECK(p.leading().first == Monomial::variable(var_index("y"), 2));
  // ties break toward the smaller exponent on the earliest variable, so
  // x*y^2 < x^2*y and the leading term of their sum is x^2*y
  MPoly q = MPoly::variable("x", 2) * MPoly::variable("y") +
            MPoly::variable("x") * MPoly::variable("y", 2);
  CHECK(q.leading().first ==
        Monomial::variable(var_index("x"), 2) * Monomial::variable(var_index("y"), 1));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(99);
  std::map<int, Rational> at{{var_index("x"), Rational(2, 3)},
                             {var_index("y"), Rational(-5)},
                             {var_index("alpha"), Rational(1, 7)},
                             {var_index("u2"), Rational(4, 9)}};
  for (int trial = 0; trial < 100; ++trial) {
    MPoly a = random_poly(rng, true), b = random_poly(rng, true);
    CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
    CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
  }
}

TEST_CASE("evaluation error modes") {
  MPoly p = MPoly::variable("x") * MPoly::variable("y");
  CHECK_THROWS_AS(p.eval({{var_index("x"), Rational(1)}}), UnassignedVariable);
  MPoly inv = MPoly::term(Monomial::variable(var_index("x"), -1), 1);
  CHECK(inv.eval({{var_index("x"), Rational(2)}}) == Rational(1, 2));
  CHECK_THROWS_AS(inv.eval({{var_index("x"), Rational(0)}}), DivisionByZero);
}

TEST_CASE("substitution") {
  MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  MPoly p = x * x + x * y + MPoly::constant(1);

  SECTION("by a polynomial") {
    MPoly r = p.subst("x", y + MPoly::constant(1));
    MPoly expect = (y + MPoly::constant(1)).pow_int(2) + (y + MPoly::constant(1)) * y +
                   MPoly::constant(1);
    CHECK(r == expect);
  }
  SECTION("by zero kills positive-exponent terms") {
    CHECK(p.subst("x", MPoly::zero()) == MPoly::constant(1));
  }
  SECTION("variable not present is a no-op") { CHECK(p.subst("u3", y) == p); }
  SECTION("negative exponents need a single-term replacement") {
    MPoly q = MPoly::term(Monomial::variable(var_index("x"), -2), Rational(3));
    MPoly r = q.subst("x", MPoly::variable("y") * Rational(2));
    // 3*(2y)^-2 = (3/4) y^-2
    CHECK(r == MPoly::term(Monomial::variable(var_index("y"), -2), Rational(3, 4)));
    CHECK_THROWS_AS(q.subst("x", y + MPoly::constant(1)), NonInvertibleSubstitution);
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(4242);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    MPoly p = random_poly(rng, true), d = random_poly(rng, true);
    if (d.is_zero()) continue;
    if (!p.is_zero()) ++nontrivial;
    CHECK(div_exact(p * d, d) == p);
  }
  CHECK(nontrivial > 50);

  MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  CHECK_THROWS_AS(div_exact(x, MPoly::zero()), DivisorZero);
  CHECK_THROWS_AS(div_exact(x * x + y, x + y), NotDivisible);
}

TEST_CASE("support and content") {
  MPoly p = MPoly::term(Monomial::variable(var_index("x"), -1), 1) * MPoly::variable("y") +
            MPoly::variable("y", 2);
  auto sup = p.support();
  REQUIRE(sup.size() == 2);
  CHECK(sup[0] == var_index("x"));
  CHECK(sup[1] == var_index("y"));
  // componentwise minimum over terms, absent variables counting as exponent 0:
  // x -> min(-1, 0) = -1, y -> min(1, 2) = 1
  Monomial content = p.content_monomial();
  CHECK(content == Monomial::from_entries({{var_index("x"), -1}, {var_index("y"), 1}}));
}

TEST_CASE("JSON round-trip is exact and byte-deterministic") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    MPoly p = random_poly(rng, true);
    Json j = mpoly_to_json(p);
    CHECK(mpoly_from_json(j) == p);
    CHECK(mpoly_to_json(mpoly_from_json(j)).dump() == j.dump());
  }
  MPoly p = MPoly::term(Monomial::from_entries({{var_index("x"), 2}, {var_index("u2"), -1}}),
                        Rational(-3, 2));
  CHECK(mpoly_to_json_string(p) == R"({"terms":[{"coeff":"-3/2","exps":{"x":2,"u2":-1}}]})");
  CHECK_THROWS_AS(mpoly_from_json_string("{\"nope\":1}"), ParseError);
  CHECK_THROWS_AS(mpoly_from_json_string("not json"), ParseError);
}

TEST_CASE("rational string forms") {
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_from_string("-3/2") == Rational(-3, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), DivisionByZero);
}
