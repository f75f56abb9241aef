#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulab/mpoly.hpp"
#include "eulab/perm.hpp"
#include "eulab/series.hpp"

namespace eulab {

struct UnknownGrammar : std::invalid_argument {
  explicit UnknownGrammar(const std::string& id)
      : std::invalid_argument("unknown grammar '" + id + "'") {}
};

// A context-free grammar in the sense of formal-derivative calculus: a set of
// substitution rules v -> polynomial. The induced operator D is linear,
// satisfies the Leibniz rule, treats unruled variables as constants, and acts
// on negative powers through D(v^e) = e v^{e-1} D(v) (valid for all integer e).
class Grammar {
 public:
  Grammar() = default;

  Grammar& rule(std::string_view var, MPoly rhs) {
    rules_[var_index(var)] = std::move(rhs);
    return *this;
  }

  Grammar& erase_rule(std::string_view var) {
    rules_.erase(var_index(var));
    return *this;
  }

  const std::map<int, MPoly>& rules() const { return rules_; }

  MPoly d(const MPoly& p) const {
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [v, ex] : m.entries()) {
        auto it = rules_.find(v);
        if (it == rules_.end()) continue;  // constant for this grammar
        Monomial reduced = m.laurent_div(Monomial::variable(v, 1));
        out += MPoly::term(reduced, c * Rational(ex)) * it->second;
      }
    }
    return out;
  }

  // D^n(p) with the whole derivative ladder cached per starting polynomial,
  // so successive orders over the same word cost one application each.
  const MPoly& d_pow(const MPoly& p, int n) const {
    if (n < 0) throw std::invalid_argument("derivative order must be >= 0");
    auto& ladder = cache_[p];
    if (ladder.empty()) ladder.push_back(p);
    while (static_cast<int>(ladder.size()) <= n) ladder.push_back(d(ladder.back()));
    return ladder[n];
  }

  // Gen(w, t) = sum_n D^n(w) t^n / n!
  Series gen(const MPoly& w, int order) const {
    Series s(order);
    for (int k = 0; k <= order; ++k)
      s.coeff(k) = d_pow(w, k) * Rational(Int(1), factorial(k));
    return s;
  }

 private:
  std::map<int, MPoly> rules_;

  struct PolyLess {
    bool operator()(const MPoly& a, const MPoly& b) const { return a.terms() < b.terms(); }
  };
  mutable std::map<MPoly, std::vector<MPoly>, PolyLess> cache_;
};

// G1: both letters feed the product xy; iterating from y generates the
// two-variable Eulerian counts over ascents/descents.
inline Grammar grammar_g1() {
  MPoly xy = MPoly::variable("x") * MPoly::variable("y");
  Grammar g;
  g.rule("x", xy).rule("y", xy);
  return g;
}

// The six-rule grammar whose iterated derivatives of a*b generate the joint
// valley / exterior-peak / double-ascent / double-descent / boundary-record
// distribution.
inline Grammar grammar_gtilde() {
  MPoly u1u2 = MPoly::variable("u1") * MPoly::variable("u2");
  Grammar g;
  g.rule("a", MPoly::variable("a") * MPoly::variable("alpha") * MPoly::variable("u4"));
  g.rule("b", MPoly::variable("b") * MPoly::variable("beta") * MPoly::variable("u3"));
  g.rule("u4", u1u2);
  g.rule("u3", u1u2);
  g.rule("u1", MPoly::variable("u1") * MPoly::variable("u3"));
  g.rule("u2", MPoly::variable("u2") * MPoly::variable("u4"));
  return g;
}

// Same core without the boundary letters a, b.
inline Grammar grammar_gtilde1() {
  Grammar g = grammar_gtilde();
  g.erase_rule("a").erase_rule("b");
  return g;
}

inline Grammar named_grammar(std::string_view id) {
  if (id == "G1") return grammar_g1();
  if (id == "Gtilde") return grammar_gtilde();
  if (id == "Gtilde1") return grammar_gtilde1();
  throw UnknownGrammar(std::string(id));
}

// Weight of a permutation in the insertion encoding:
//   a * b * (u1 u2)^ipk * u3^rda * u4^ldd * alpha^(LRmin-1) * beta^(RLmin-1).
inline MPoly labeling_weight(const Permutation& p) {
  if (p.n() == 0) throw std::invalid_argument("labeling weight wants n >= 1");
  auto v = p.span();
  int m = stat::ipk(v);
  std::vector<Monomial::Entry> e = {
      {var_index("a"), 1},
      {var_index("b"), 1},
      {var_index("u1"), m},
      {var_index("u2"), m},
      {var_index("u3"), stat::rda(v)},
      {var_index("u4"), stat::ldd(v)},
      {var_index("alpha"), stat::lr_min(v) - 1},
      {var_index("beta"), stat::rl_min(v) - 1},
  };
  return MPoly::term(Monomial::from_entries(std::move(e)), 1);
}

// Places value n+1 at position pos (1-based) in p, shifting the tail right.
inline Permutation insert_max(const Permutation& p, int pos) {
  std::vector<int> v = p.values();
  v.insert(v.begin() + (pos - 1), p.n() + 1);
  return Permutation(std::move(v), Permutation::unchecked_tag{});
}

// The inductive step of the insertion encoding: for every permutation of [n],
// summing the weights of its n+1 single-slot extensions must reproduce the
// grammar derivative of its own weight. Running it against a perturbed
// grammar is the intended way to see it fail.
inline bool verify_insertion_cases(int n, const Grammar& g = grammar_gtilde()) {
  bool ok = true;
  for_each_perm(n, [&](std::span<const int> v) {
    if (!ok) return;
    Permutation p(std::vector<int>(v.begin(), v.end()), Permutation::unchecked_tag{});
    MPoly expanded;
    for (int pos = 1; pos <= n + 1; ++pos) expanded += labeling_weight(insert_max(p, pos));
    if (!(expanded == g.d(labeling_weight(p)))) ok = false;
  });
  return ok;
}

// If p lies in the subring generated by e = u1*u2 and s = u3+u4 — every term
// balanced in u1/u2, each u1-degree slice a polynomial in u3+u4 — returns its
// image under e -> x*y, s -> x+y. Otherwise returns nullopt.
inline std::optional<MPoly> rewrite_balanced_es(const MPoly& p) {
  int iu1 = var_index("u1"), iu2 = var_index("u2");
  int iu3 = var_index("u3"), iu4 = var_index("u4");
  std::map<int, MPoly> slices;  // u1-exponent -> coefficient in u3, u4
  for (const auto& [m, c] : p.terms()) {
    int a = m.exponent(iu1);
    if (m.exponent(iu2) != a) return std::nullopt;
    std::vector<Monomial::Entry> rest;
    for (const auto& [v, e] : m.entries())
      if (v != iu1 && v != iu2) {
        if (v != iu3 && v != iu4) return std::nullopt;
        rest.emplace_back(v, e);
      }
    slices[a].add_term(Monomial::from_entries(std::move(rest)), c);
  }
  MPoly xy = MPoly::variable("x") * MPoly::variable("y");
  MPoly xpy = MPoly::variable("x") + MPoly::variable("y");
  MPoly u3pu4 = MPoly::variable("u3") + MPoly::variable("u4");
  MPoly out;
  for (const auto& [a, slice] : slices) {
    // Candidate one-variable form: kill u4, leaving r(u3); then r must
    // reproduce the slice at u3 -> u3+u4.
    MPoly r = slice.subst(iu4, MPoly::zero());
    if (!(r.subst(iu3, u3pu4) == slice)) return std::nullopt;
    out += xy.pow_int(a) * r.subst(iu3, xpy);
  }
  return out;
}

}  // namespace eulab
