#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eulab/mpoly.hpp"

namespace eulab {

struct OrderExceeded : std::out_of_range {
  OrderExceeded(int n, int order)
      : std::out_of_range("coefficient " + std::to_string(n) + " beyond truncation order " +
                          std::to_string(order)) {}
};

struct BadConstantTerm : std::domain_error {
  explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct ZeroDivisor : std::domain_error {
  ZeroDivisor() : std::domain_error("series division by zero") {}
};

// Power series in t truncated at a fixed order, with multivariate-polynomial
// coefficients. Coefficients are stored ordinarily: f = sum c_n t^n; the
// exponential-generating-function view is egf_coeff(f, n) = n! * c_n.
class Series {
 public:
  explicit Series(int order) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }

  static Series zero(int order) { return Series(order); }

  static Series constant(const MPoly& c0, int order) {
    Series s(order);
    s.c_[0] = c0;
    return s;
  }

  static Series t_power(int k, int order) {
    Series s(order);
    if (k <= order) s.c_[k] = MPoly::constant(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const MPoly& coeff(int n) const {
    if (n < 0 || n > order()) throw OrderExceeded(n, order());
    return c_[n];
  }

  MPoly& coeff(int n) {
    if (n < 0 || n > order()) throw OrderExceeded(n, order());
    return c_[n];
  }

  bool operator==(const Series& o) const { return c_ == o.c_; }

  // Truncation to a (possibly lower) order.
  Series truncate(int new_order) const {
    Series s(std::min(new_order, order()));
    for (int k = 0; k <= s.order(); ++k) s.c_[k] = c_[k];
    return s;
  }

 private:
  std::vector<MPoly> c_;
};

// All binary operations truncate to the smaller operand order; coefficients
// beyond what both operands determine are never fabricated.

inline Series add(const Series& f, const Series& g) {
  Series r(std::min(f.order(), g.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeff(k) = f.coeff(k) + g.coeff(k);
  return r;
}

inline Series sub(const Series& f, const Series& g) {
  Series r(std::min(f.order(), g.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeff(k) = f.coeff(k) - g.coeff(k);
  return r;
}

inline Series mul(const Series& f, const Series& g) {
  Series r(std::min(f.order(), g.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (g.coeff(j).is_zero()) continue;
      r.coeff(i + j) += f.coeff(i) * g.coeff(j);
    }
  }
  return r;
}

inline Series mul(const Series& f, const MPoly& c) {
  Series r = f;
  for (int k = 0; k <= r.order(); ++k) r.coeff(k) = r.coeff(k) * c;
  return r;
}

inline Series neg(const Series& f) {
  Series r = f;
  for (int k = 0; k <= r.order(); ++k) r.coeff(k) = -r.coeff(k);
  return r;
}

// f(c*t): multiplies coefficient n by c^n.
inline Series scale_t(const Series& f, const MPoly& c) {
  Series r(f.order());
  MPoly ck = MPoly::constant(1);
  for (int k = 0; k <= f.order(); ++k) {
    r.coeff(k) = f.coeff(k) * ck;
    if (k < f.order()) ck *= c;
  }
  return r;
}

// d/dt; the result determines one order fewer.
inline Series derivative_t(const Series& f) {
  if (f.order() == 0) return Series(0);
  Series r(f.order() - 1);
  for (int k = 0; k <= r.order(); ++k) r.coeff(k) = f.coeff(k + 1) * Rational(k + 1);
  return r;
}

// Antiderivative with zero constant term, truncated back to the input order
// (the top input coefficient falls off the end).
inline Series integrate_t(const Series& f) {
  Series r(f.order());
  for (int k = 1; k <= r.order(); ++k) r.coeff(k) = f.coeff(k - 1) * Rational(Int(1), Int(k));
  return r;
}

inline MPoly egf_coeff(const Series& f, int n) {
  return f.coeff(n) * Rational(factorial(n));
}

// exp(f) for f with zero constant term: g' = f' g, solved order by order.
inline Series exp_series(const Series& f) {
  if (!f.coeff(0).is_zero())
    throw BadConstantTerm("exp needs a series with zero constant term");
  Series g(f.order());
  g.coeff(0) = MPoly::constant(1);
  for (int m = 1; m <= f.order(); ++m) {
    MPoly acc;
    for (int k = 1; k <= m; ++k) acc += f.coeff(k) * g.coeff(m - k) * Rational(k);
    g.coeff(m) = acc * Rational(Int(1), Int(m));
  }
  return g;
}

// log(f) for f with constant term 1.
inline Series log_series(const Series& f) {
  if (!(f.coeff(0) == MPoly::constant(1)))
    throw BadConstantTerm("log needs a series with constant term 1");
  Series g(f.order());
  for (int m = 1; m <= f.order(); ++m) {
    MPoly acc = f.coeff(m) * Rational(m);
    for (int k = 1; k < m; ++k) acc -= g.coeff(k) * f.coeff(m - k) * Rational(k);
    g.coeff(m) = acc * Rational(Int(1), Int(m));
  }
  return g;
}

// f^E := exp(E * log f) for an arbitrary polynomial exponent E; f must have
// constant term exactly 1.
inline Series pow_formal(const Series& f, const MPoly& e) {
  if (!(f.coeff(0) == MPoly::constant(1)))
    throw BadConstantTerm("formal power needs base constant term 1");
  return exp_series(mul(log_series(f), e));
}

inline Series pow_formal(const Series& f, const Rational& e) {
  return pow_formal(f, MPoly::constant(e));
}

// f / g in the coefficient ring: common leading powers of t cancel first,
// then the quotient is solved order by order with exact polynomial division
// by g's lowest nonzero coefficient. Inexact division raises NotDivisible.
inline Series div(const Series& f, const Series& g) {
  int vg = 0;
  while (vg <= g.order() && g.coeff(vg).is_zero()) ++vg;
  if (vg > g.order()) throw ZeroDivisor();
  for (int k = 0; k < vg; ++k)
    if (k <= f.order() && !f.coeff(k).is_zero()) throw NotDivisible();

  int out_order = std::min(f.order(), g.order()) - vg;
  Series q(std::max(out_order, 0));
  const MPoly& g0 = g.coeff(vg);
  for (int m = 0; m <= out_order; ++m) {
    MPoly acc = f.coeff(m + vg);
    for (int k = 1; k <= m; ++k) acc -= g.coeff(k + vg) * q.coeff(m - k);
    q.coeff(m) = div_exact(acc, g0);
  }
  return q;
}

}  // namespace eulab
