#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eulab/series.hpp"

namespace eulab {

// Named exponential generating functions. Everything here is radical-free:
// closed forms quoted with square roots of a discriminant D are expanded
// through the even/odd split cosh(t*sqrt(D)) = sum D^n t^(2n)/(2n)! and
// sinh(t*sqrt(D))/sqrt(D) = sum D^n t^(2n+1)/(2n+1)!, which are polynomial
// in D itself.

// sum_{k} w^k t^(2k) / (2k)!
inline Series cosh_even(const MPoly& w, int order) {
  Series s(order);
  MPoly wk = MPoly::constant(1);
  for (int k = 0; 2 * k <= order; ++k) {
    s.coeff(2 * k) = wk * Rational(Int(1), factorial(2 * k));
    wk *= w;
  }
  return s;
}

// sum_{k} w^k t^(2k+1) / (2k+1)!
inline Series sinhc_even(const MPoly& w, int order) {
  Series s(order);
  MPoly wk = MPoly::constant(1);
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    s.coeff(2 * k + 1) = wk * Rational(Int(1), factorial(2 * k + 1));
    wk *= w;
  }
  return s;
}

// exp(c * t) as a series with polynomial c.
inline Series exp_ct(const MPoly& c, int order) {
  Series lin(order);
  if (order >= 1) lin.coeff(1) = c;
  return exp_series(lin);
}

// F = (e^{xt} - e^{yt}) / (x e^{yt} - y e^{xt}), solved order by order; every
// step divides exactly by x - y.
inline Series f_series(int order) {
  MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  std::vector<MPoly> num(order + 1), den(order + 1);
  MPoly xk = MPoly::constant(1), yk = MPoly::constant(1);
  for (int k = 0; k <= order; ++k) {
    Rational inv_fact(Int(1), factorial(k));
    num[k] = (xk - yk) * inv_fact;
    den[k] = (x * yk - y * xk) * inv_fact;
    xk *= x;
    yk *= y;
  }
  MPoly d0 = x - y;  // den[0]
  Series f(order);
  for (int m = 1; m <= order; ++m) {
    MPoly acc = num[m];
    for (int k = 1; k <= m; ++k) acc -= den[k] * f.coeff(m - k);
    f.coeff(m) = div_exact(acc, d0);
  }
  return f;
}

// 1 + x*F and 1 + y*F, shared by several builders.
inline Series one_plus_var_f(const char* var, const Series& f) {
  Series s = mul(f, MPoly::variable(var));
  s.coeff(0) += MPoly::constant(1);
  return s;
}

// (1 + xF)^alpha (1 + yF)^beta
inline Series gf_cs_main1(int order) {
  Series f = f_series(order);
  return mul(pow_formal(one_plus_var_f("x", f), MPoly::variable("alpha")),
             pow_formal(one_plus_var_f("y", f), MPoly::variable("beta")));
}

// ((1+xF)(1+yF))^{(alpha+beta)/2} * exp((beta-alpha)/2 * (u3-u4) * t).
// x,y and u1..u4 are formally independent here; callers evaluate under the
// intended constraints x+y = u3+u4, xy = u1*u2.
inline Series gf_main2(int order) {
  Series f = f_series(order);
  MPoly alpha = MPoly::variable("alpha"), beta = MPoly::variable("beta");
  MPoly u3 = MPoly::variable("u3"), u4 = MPoly::variable("u4");
  Series base = mul(one_plus_var_f("x", f), one_plus_var_f("y", f));
  return mul(pow_formal(base, (alpha + beta) * Rational(1, 2)),
             exp_ct((beta - alpha) * (u3 - u4) * Rational(1, 2), order));
}

// The half-angle bracket cosh((t/2) sqrt(D)) - (s/sqrt(D)) sinh((t/2) sqrt(D))
// with D = s^2 - 4e, written radical-free; s = u3+u4, e = u1*u2 by default.
inline Series half_bracket(const MPoly& s, const MPoly& disc, int order) {
  Series br = sub(cosh_even(disc, order), mul(sinhc_even(disc, order), s));
  return scale_t(br, MPoly::constant(Rational(1, 2)));
}

// exp((beta-alpha)(u3-u4)t/2) * bracket^{-(alpha+beta)}, D = (u3+u4)^2 - 4 u1 u2.
inline Series gf_main2c(int order) {
  MPoly alpha = MPoly::variable("alpha"), beta = MPoly::variable("beta");
  MPoly u1 = MPoly::variable("u1"), u2 = MPoly::variable("u2");
  MPoly u3 = MPoly::variable("u3"), u4 = MPoly::variable("u4");
  MPoly s = u3 + u4;
  MPoly disc = s * s - Rational(4) * u1 * u2;
  return mul(pow_formal(half_bracket(s, disc, order), -(alpha + beta)),
             exp_ct((beta - alpha) * (u3 - u4) * Rational(1, 2), order));
}

// alpha = 0 specialization: exp(beta (u3-u4) t / 2) * bracket^{-beta}.
inline Series gf_cor_lpk_des(int order) {
  MPoly beta = MPoly::variable("beta");
  MPoly u1 = MPoly::variable("u1"), u2 = MPoly::variable("u2");
  MPoly u3 = MPoly::variable("u3"), u4 = MPoly::variable("u4");
  MPoly s = u3 + u4;
  MPoly disc = s * s - Rational(4) * u1 * u2;
  return mul(pow_formal(half_bracket(s, disc, order), -beta),
             exp_ct(beta * (u3 - u4) * Rational(1, 2), order));
}

// (cosh(t sqrt(v^2-u^2)) - v sinh(t sqrt(v^2-u^2))/sqrt(v^2-u^2))^{-beta}
inline Series gf_pk_thm(int order) {
  MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
  MPoly disc = v * v - u * u;
  Series br = sub(cosh_even(disc, order), mul(sinhc_even(disc, order), v));
  return pow_formal(br, -MPoly::variable("beta"));
}

// Same bracket to power -(alpha+beta): both boundary weights.
inline Series gf_pk_lr(int order) {
  MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
  MPoly disc = v * v - u * u;
  Series br = sub(cosh_even(disc, order), mul(sinhc_even(disc, order), v));
  return pow_formal(br, -(MPoly::variable("alpha") + MPoly::variable("beta")));
}

// Shared bracket for the u-only double-ascent family: D = (u+1)^2 - 4,
// evaluated at half argument.
inline Series da_bracket(int order) {
  MPoly u = MPoly::variable("u");
  MPoly disc = (u + Rational(1)) * (u + Rational(1)) - Rational(4);
  return half_bracket(u + Rational(1), disc, order);
}

// exp(beta (u-1) t / 2) * da_bracket^{-beta}
inline Series gf_lrda(int order) {
  MPoly beta = MPoly::variable("beta"), u = MPoly::variable("u");
  return mul(pow_formal(da_bracket(order), -beta),
             exp_ct(beta * (u - Rational(1)) * Rational(1, 2), order));
}

// exp(alpha (1-u) t / 2) * da_bracket^{-alpha}
inline Series gf_da(int order) {
  MPoly alpha = MPoly::variable("alpha"), u = MPoly::variable("u");
  return mul(pow_formal(da_bracket(order), -alpha),
             exp_ct(alpha * (Rational(1) - u) * Rational(1, 2), order));
}

// exp((beta-alpha)(u-1)t/2) * da_bracket^{-(alpha+beta)}
inline Series gf_rda(int order) {
  MPoly alpha = MPoly::variable("alpha"), beta = MPoly::variable("beta");
  MPoly u = MPoly::variable("u");
  return mul(pow_formal(da_bracket(order), -(alpha + beta)),
             exp_ct((beta - alpha) * (u - Rational(1)) * Rational(1, 2), order));
}

// Left-peak counts: inverse of cosh_even(1-u) - sinhc_even(1-u).
inline Series gf_gessel_lpk(int order) {
  MPoly k = Rational(1) - MPoly::variable("u");
  Series den = sub(cosh_even(k, order), sinhc_even(k, order));
  return div(Series::constant(MPoly::constant(1), order), den);
}

// Interior peaks, with the loose symbol fixed at v = 1:
// cosh_even(1-u) / (cosh_even(1-u) - sinhc_even(1-u)).
inline Series gf_davidbarton_pk(int order) {
  MPoly k = Rational(1) - MPoly::variable("u");
  Series num = cosh_even(k, order);
  return div(num, sub(num, sinhc_even(k, order)));
}

// exp((1-u)t/2) / da_bracket
inline Series gf_zhuang_da(int order) {
  MPoly u = MPoly::variable("u");
  return mul(div(Series::constant(MPoly::constant(1), order), da_bracket(order)),
             exp_ct((Rational(1) - u) * Rational(1, 2), order));
}

// (cosh + (1-u) sinhc) / (cosh - (1+u) sinhc) at half argument, D = (u+1)^2 - 4.
inline Series gf_zhuang_rda(int order) {
  MPoly u = MPoly::variable("u");
  MPoly disc = (u + Rational(1)) * (u + Rational(1)) - Rational(4);
  Series ch = cosh_even(disc, order), sh = sinhc_even(disc, order);
  Series num = scale_t(add(ch, mul(sh, Rational(1) - u)), MPoly::constant(Rational(1, 2)));
  return div(num, da_bracket(order));
}

// exp((u-1)t/2) / da_bracket
inline Series gf_zhuang_lrda(int order) {
  MPoly u = MPoly::variable("u");
  return mul(div(Series::constant(MPoly::constant(1), order), da_bracket(order)),
             exp_ct((u - Rational(1)) * Rational(1, 2), order));
}

// ((e^{t(x-1)} - x) / (1-x))^{-q}; the base coefficients divide exactly by 1-x.
inline Series gf_brenti(int order) {
  MPoly x = MPoly::variable("x");
  MPoly one_minus_x = Rational(1) - x;
  Series base(order);
  base.coeff(0) = MPoly::constant(1);
  MPoly pk = x - Rational(1);  // (x-1)^k
  for (int k = 1; k <= order; ++k) {
    base.coeff(k) = div_exact(pk * Rational(Int(1), factorial(k)), one_minus_x);
    pk *= x - Rational(1);
  }
  return pow_formal(base, -MPoly::variable("q"));
}

// (1/(1-t))^alpha; the geometric base enumerates by left-to-right maxima.
inline Series gf_stirling_special(int order) {
  Series geo(order);
  for (int k = 0; k <= order; ++k) geo.coeff(k) = MPoly::constant(1);
  return pow_formal(geo, MPoly::variable("alpha"));
}

inline Series gf_sec(int order) {
  MPoly minus_one = MPoly::constant(-1);
  return div(Series::constant(MPoly::constant(1), order), cosh_even(minus_one, order));
}

inline Series gf_tan(int order) {
  MPoly minus_one = MPoly::constant(-1);
  return div(sinhc_even(minus_one, order), cosh_even(minus_one, order));
}

// Builder registry for the CLI and tests.
inline const std::map<std::string, std::function<Series(int)>>& series_builders() {
  static const std::map<std::string, std::function<Series(int)>> m = {
      {"F", f_series},
      {"cs_main1", gf_cs_main1},
      {"main2", gf_main2},
      {"main2c", gf_main2c},
      {"cor_lpk_des", gf_cor_lpk_des},
      {"pk_thm", gf_pk_thm},
      {"pk_lr", gf_pk_lr},
      {"lrda", gf_lrda},
      {"da", gf_da},
      {"rda", gf_rda},
      {"gessel_lpk", gf_gessel_lpk},
      {"davidbarton_pk", gf_davidbarton_pk},
      {"zhuang_da", gf_zhuang_da},
      {"zhuang_rda", gf_zhuang_rda},
      {"zhuang_lrda", gf_zhuang_lrda},
      {"brenti", gf_brenti},
      {"stirling_special", gf_stirling_special},
      {"sec", gf_sec},
      {"tan", gf_tan},
  };
  return m;
}

}  // namespace eulab
