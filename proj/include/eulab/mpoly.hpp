#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulab/monomial.hpp"
#include "eulab/rational.hpp"
#include "eulab/vartable.hpp"

namespace eulab {

struct UnassignedVariable : std::invalid_argument {
  explicit UnassignedVariable(const std::string& var)
      : std::invalid_argument("no value assigned to variable '" + var + "'") {}
};

struct NonInvertibleSubstitution : std::invalid_argument {
  explicit NonInvertibleSubstitution(const std::string& var)
      : std::invalid_argument("variable '" + var +
                              "' occurs with negative exponent; replacement must be a single "
                              "invertible term") {}
};

struct NotDivisible : std::domain_error {
  NotDivisible() : std::domain_error("exact division failed: nonzero remainder") {}
};

struct DivisorZero : std::domain_error {
  DivisorZero() : std::domain_error("exact division by the zero polynomial") {}
};

// Sparse multivariate Laurent polynomial over exact rationals. Terms live in
// a map ordered graded-lexicographically, so iteration order (and therefore
// printing and serialization) is canonical. No zero coefficients are stored.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MPoly() = default;

  static MPoly zero() { return MPoly(); }

  static MPoly constant(Rational c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
    return p;
  }

  static MPoly variable(std::string_view name, int exp = 1) {
    return term(Monomial::variable(var_index(name), exp), 1);
  }

  static MPoly term(Monomial m, Rational c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  Rational constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  // Leading term under the graded-lex order; polynomial must be nonzero.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  // k >= 0 (this is a ring power, not a Laurent one; use inverse monomials
  // explicitly when negative powers of a *term* are wanted).
  MPoly pow_int(int k) const {
    if (k < 0) throw std::invalid_argument("pow_int wants a nonnegative exponent");
    MPoly acc = constant(1);
    MPoly base = *this;
    while (k) {
      if (k & 1) acc *= base;
      if (k >>= 1) base *= base;
    }
    return acc;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Exact evaluation. Every variable occurring in the polynomial must be
  // assigned; a negative exponent at a zero value raises DivisionByZero.
  Rational eval(const std::map<int, Rational>& assign) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [v, ex] : m.entries()) {
        auto it = assign.find(v);
        if (it == assign.end()) throw UnassignedVariable(var_name(v));
        t *= rational_pow(it->second, ex);
      }
      total += t;
    }
    return total;
  }

  Rational eval_by_name(const std::map<std::string, Rational>& assign) const {
    std::map<int, Rational> byidx;
    for (const auto& [name, val] : assign) byidx.emplace(var_index(name), val);
    return eval(byidx);
  }

  // Substitutes `repl` for every occurrence of the variable. Occurrences with
  // negative exponent require `repl` to be a single (invertible) term.
  MPoly subst(int var, const MPoly& repl) const {
    MPoly out;
    std::map<int, MPoly> pow_cache;  // positive powers of repl
    for (const auto& [m, c] : terms_) {
      int ex = m.exponent(var);
      if (ex == 0) {
        out.add_term(m, c);
        continue;
      }
      Monomial rest = m.laurent_div(Monomial::variable(var, ex));
      if (ex > 0) {
        auto it = pow_cache.find(ex);
        if (it == pow_cache.end()) it = pow_cache.emplace(ex, repl.pow_int(ex)).first;
        out += term(rest, c) * it->second;
      } else {
        if (repl.term_count() != 1) throw NonInvertibleSubstitution(var_name(var));
        const auto& [rm, rc] = *repl.terms().begin();
        out.add_term(rest * rm.pow(ex), c * rational_pow(rc, ex));
      }
    }
    return out;
  }

  MPoly subst(std::string_view var, const MPoly& repl) const {
    return subst(var_index(var), repl);
  }

  // Variables with a nonzero exponent somewhere in the polynomial.
  std::vector<int> support() const {
    std::vector<int> vars;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, ex] : m.entries()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  // Componentwise minimum exponent over all terms (0 for variables missing
  // from some term); the "monomial content" used to normalize Laurent
  // polynomials to true polynomials.
  Monomial content_monomial() const {
    if (terms_.empty()) return Monomial();
    std::map<int, int> lo;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::map<int, int> cur;
      for (const auto& [v, ex] : m.entries()) cur[v] = ex;
      if (first) {
        lo = cur;
        first = false;
      } else {
        for (auto& [v, ex] : lo) ex = std::min(ex, cur.count(v) ? cur[v] : 0);
        for (const auto& [v, ex] : cur)
          if (!lo.count(v)) lo[v] = std::min(ex, 0);
      }
      // variables absent from this term force the minimum down to <= 0
      for (auto& [v, ex] : lo)
        if (!cur.count(v)) ex = std::min(ex, 0);
    }
    std::vector<Monomial::Entry> entries(lo.begin(), lo.end());
    return Monomial::from_entries(std::move(entries));
  }

  std::string str() const;

 private:
  TermMap terms_;
};

inline MPoly operator+(MPoly a, const Rational& c) { return a += MPoly::constant(c); }
inline MPoly operator+(const Rational& c, MPoly a) { return a += MPoly::constant(c); }
inline MPoly operator-(MPoly a, const Rational& c) { return a -= MPoly::constant(c); }
inline MPoly operator-(const Rational& c, const MPoly& a) { return MPoly::constant(c) - a; }

// Exact quotient p / d. Monomial content of both sides is stripped first (so
// Laurent inputs reduce to the true-polynomial case), then a single-divisor
// reduction under the graded-lex order runs to a zero remainder. A nonzero
// remainder at any step raises NotDivisible.
inline MPoly div_exact(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw DivisorZero();
  if (p.is_zero()) return MPoly::zero();

  Monomial cp = p.content_monomial();
  Monomial cd = d.content_monomial();
  MPoly pn, dn;
  for (const auto& [m, c] : p.terms()) pn.add_term(m.laurent_div(cp), c);
  for (const auto& [m, c] : d.terms()) dn.add_term(m.laurent_div(cd), c);

  MPoly q;
  MPoly r = pn;
  const auto& [dm, dc] = dn.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!rm.divisible_by(dm)) throw NotDivisible();
    MPoly t = MPoly::term(rm.laurent_div(dm), rc / dc);
    q += t;
    r -= t * dn;
  }
  Monomial shift = cp.laurent_div(cd);
  MPoly out;
  for (const auto& [m, c] : q.terms()) out.add_term(m * shift, c);
  return out;
}

inline std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading term first (descending graded-lex) for readability
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool coeff_shown = m.is_unit() || a != 1;
    if (coeff_shown) os << a;
    bool need_star = coeff_shown;
    for (const auto& [v, ex] : m.entries()) {
      if (need_star) os << "*";
      os << var_name(v);
      if (ex != 1) os << "^" << ex;
      need_star = true;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace eulab
