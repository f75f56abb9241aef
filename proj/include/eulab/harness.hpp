#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulab/families.hpp"
#include "eulab/grammar.hpp"
#include "eulab/mpoly_json.hpp"
#include "eulab/reparam.hpp"
#include "eulab/series_builders.hpp"

namespace eulab {

struct UnknownCheck : std::invalid_argument {
  explicit UnknownCheck(const std::string& id)
      : std::invalid_argument("unknown check '" + id + "'") {}
};

enum class RunMode { preferred, symbolic, points };

struct CheckConfig {
  std::vector<std::string> ids;  // empty: the whole catalog
  int n_max = 0;                 // 0: per-check default
  RunMode mode = RunMode::preferred;
  int points = 5;
  std::uint64_t seed = 0;
  int threads = 1;
  bool timings = false;  // keep elapsed_ms at 0 unless asked, so reports are reproducible
};

struct CheckRecord {
  std::string id;
  int n = 0;
  std::string mode;    // "symbolic" | "points"
  std::string status;  // "pass" | "fail" | "skipped"
  long long elapsed_ms = 0;
  Json detail = Json::object();
};

struct Report {
  std::vector<CheckRecord> checks;
  bool all_passed() const {
    for (const auto& r : checks)
      if (r.status == "fail") return false;
    return true;
  }
};

struct CheckContext {
  std::string id;
  RunMode mode = RunMode::symbolic;  // resolved: symbolic or points
  int points = 5;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Outcome {
  bool pass = true;
  Json detail = Json::object();
};

struct CheckInfo {
  std::string id;
  std::string description;
  std::string attribution;  // who the identity is classically due to; empty if none
  bool symbolic_capable = true;
  bool points_capable = true;
  int n_min = 1;
  int n_max = 7;  // default ceiling
  std::function<Outcome(int, const CheckContext&)> run;
};

namespace harness_detail {

inline Json assignment_json(const Assignment& a) {
  Json j = Json::object();
  for (const auto& [k, v] : a) j[k] = rational_to_string(v);
  return j;
}

inline Outcome fail_diff(const MPoly& lhs, const MPoly& rhs) {
  Outcome o;
  o.pass = false;
  o.detail["difference"] = mpoly_to_json(lhs - rhs);
  return o;
}

// Polynomial identity: compared exactly in symbolic mode, or at ctx.points
// independent nonzero rational assignments of the union of supports.
inline Outcome compare_polys(const MPoly& lhs, const MPoly& rhs, int n, const CheckContext& ctx) {
  if (ctx.mode == RunMode::symbolic) {
    if (lhs == rhs) return {};
    return fail_diff(lhs, rhs);
  }
  std::set<std::string> vars;
  for (int v : lhs.support()) vars.insert(var_name(v));
  for (int v : rhs.support()) vars.insert(var_name(v));
  Sampler s(check_rng(ctx.seed, ctx.id, n));
  for (int k = 0; k < ctx.points; ++k) {
    Assignment a = assign_free(s, vars);
    Rational lv = lhs.eval_by_name(a), rv = rhs.eval_by_name(a);
    if (lv != rv) {
      Outcome o;
      o.pass = false;
      o.detail["point"] = k;
      o.detail["assignment"] = assignment_json(a);
      o.detail["lhs"] = rational_to_string(lv);
      o.detail["rhs"] = rational_to_string(rv);
      return o;
    }
  }
  return {};
}

// Constraint-respecting point evaluation: draw fills the assignment it used.
using DrawFn = std::function<std::pair<Rational, Rational>(Sampler&, Assignment&)>;

inline Outcome compare_at_points(const DrawFn& draw, int n, const CheckContext& ctx) {
  Sampler s(check_rng(ctx.seed, ctx.id, n));
  for (int k = 0; k < ctx.points; ++k) {
    Assignment a;
    auto [lv, rv] = draw(s, a);
    if (lv != rv) {
      Outcome o;
      o.pass = false;
      o.detail["point"] = k;
      o.detail["assignment"] = assignment_json(a);
      o.detail["lhs"] = rational_to_string(lv);
      o.detail["rhs"] = rational_to_string(rv);
      return o;
    }
  }
  return {};
}

inline Outcome compare_scalars(const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) return {};
  Outcome o;
  o.pass = false;
  o.detail["lhs"] = rational_to_string(lhs);
  o.detail["rhs"] = rational_to_string(rhs);
  return o;
}

inline Outcome compare_series(const Series& lhs, const Series& rhs, const char* which) {
  if (lhs == rhs) return {};
  Outcome o;
  o.pass = false;
  o.detail["part"] = which;
  int top = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= top; ++k)
    if (!(lhs.coeff(k) == rhs.coeff(k))) {
      o.detail["order"] = k;
      o.detail["difference"] = mpoly_to_json(lhs.coeff(k) - rhs.coeff(k));
      break;
    }
  return o;
}

inline Rational half_power(int e) { return Rational(Int(1), Int(1) << e); }

inline MPoly var(const char* name) { return MPoly::variable(name); }

}  // namespace harness_detail

inline std::vector<CheckInfo> build_registry() {
  using namespace harness_detail;
  using enum StatId;
  std::vector<CheckInfo> reg;
  auto add = [&](CheckInfo info) { reg.push_back(std::move(info)); };

  add({"stirling-all",
       "cyc, LRmax, RLmax, LRmin and RLmin each distribute over S_n as x(x+1)...(x+n-1)",
       "Stirling cycle numbers", true, true, 1, 8, [](int n, const CheckContext& c) {
         MPoly rf = rising_factorial(n, "x");
         for (StatId s : {StatId::cyc, StatId::LRmax, StatId::RLmax, StatId::LRmin, StatId::RLmin}) {
           MPoly d = joint_dist({{{s, "x"}}, GroundSet::sym, n}, c.threads);
           Outcome o = harness_detail::compare_polys(d, rf, n, c);
           if (!o.pass) {
             o.detail["stat"] = stat_name(s);
             return o;
           }
         }
         return Outcome{};
       }});

  add({"cs-gf",
       "ascent/descent polynomial with both boundary-record weights over S_{n+1} vs its EGF",
       "Carlitz-Scoville", true, true, 1, 7, [](int n, const CheckContext& c) {
         return compare_polys(a_poly(n, c.threads), egf_coeff(gf_cs_main1(n), n), n, c);
       }});

  add({"cs-exterior",
       "exterior peaks with descents and ascents over S_{n+1} vs the (1+yF)(1+xF) EGF on the "
       "linked-variable locus",
       "Carlitz-Scoville", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist(
             {{{epk, "u", -1}, {des, "v"}, {asc, "w"}}, GroundSet::sym_plus_1, n}, c.threads);
         Series f = f_series(n);
         MPoly rhs = egf_coeff(mul(one_plus_var_f("y", f), one_plus_var_f("x", f)), n);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_uvw(s);
               return std::pair{lhs.eval_by_name(a), rhs.eval_by_name(a)};
             },
             n, c);
       }});

  add({"cs-exterior-varia",
       "valley / exterior-peak / left-double-ascent / right-double-descent refinement over "
       "S_{n+1} vs the same EGF on the linked-variable locus",
       "Carlitz-Scoville", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{val, "u1"}, {epk, "u2", -1}, {lda, "u3"}, {rdd, "u4"}},
                                 GroundSet::sym_plus_1,
                                 n},
                                c.threads);
         Series f = f_series(n);
         MPoly rhs = egf_coeff(mul(one_plus_var_f("y", f), one_plus_var_f("x", f)), n);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s);
               return std::pair{lhs.eval_by_name(a), rhs.eval_by_name(a)};
             },
             n, c);
       }});

  add({"F-orign",
       "the same four-statistic refinement over S_n equals n! times the kernel coefficient F_n "
       "on the linked-variable locus",
       "Carlitz-Scoville", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist(
             {{{val, "u1"}, {epk, "u2", -1}, {lda, "u3"}, {rdd, "u4"}}, GroundSet::sym, n},
             c.threads);
         MPoly rhs = egf_coeff(f_series(n), n);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s);
               return std::pair{lhs.eval_by_name(a), rhs.eval_by_name(a)};
             },
             n, c);
       }});

  add({"main2",
       "P-polynomial vs the EGF pairing the symmetric kernel power with an exponential "
       "prefactor, on the linked-variable locus",
       "", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = p_poly(n, c.threads);
         MPoly rhs = egf_coeff(gf_main2(n), n);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s, true);
               return std::pair{lhs.eval_by_name(a), rhs.eval_by_name(a)};
             },
             n, c);
       }});

  add({"main2c", "P-polynomial vs its radical-free even/odd-split EGF, symbolically in all six "
                 "parameters",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         return compare_polys(p_poly_min(n, c.threads), egf_coeff(gf_main2c(n), n), n, c);
       }});

  add({"main2ca", "P-polynomial under beta = -1-alpha vs the explicit binomial double sum", "",
       true, true, 1, 6, [](int n, const CheckContext& c) {
         MPoly mal = MPoly::constant(-1) - var("alpha");
         MPoly lhs = p_poly_min(n, c.threads).subst("beta", mal);
         return compare_polys(lhs, explicit_main2ca(n), n, c);
       }});

  add({"main2cacor3", "2^n P_n at alpha = beta = -1/2 collapses to discriminant powers", "", true,
       true, 1, 6, [](int n, const CheckContext& c) {
         MPoly mhalf = MPoly::constant(Rational(-1, 2));
         MPoly lhs = p_poly_min(n, c.threads).subst("alpha", mhalf).subst("beta", mhalf) *
                     Rational(Int(1) << n);
         MPoly s = var("u3") + var("u4");
         MPoly w = s * s - Rational(4) * var("u1") * var("u2");
         MPoly rhs = w.pow_int(n / 2);
         if (n % 2) rhs = -(s * rhs);
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"enumer-pk",
       "interior-peak polynomial with record weights at beta = -1-alpha collapses to "
       "+-(1-u)^floor(n/2)",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly raw = joint_dist(
             {{{ipk, "u"}, {LRmin, "alpha", -1}, {RLmin, "beta", -1}}, GroundSet::sym_plus_1, n},
             c.threads);
         MPoly lhs = raw.subst("beta", MPoly::constant(-1) - var("alpha"));
         return compare_polys(lhs, closed_enumer("pk", n), n, c);
       }});

  add({"enumer-lpk",
       "left-peak polynomial signed by RLmin parity collapses to +-(1-u)^floor(n/2)", "", true,
       true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{lpk, "u"}, {RLmin, "x"}}, GroundSet::sym, n}, c.threads)
                         .subst("x", MPoly::constant(-1));
         return compare_polys(lhs, closed_enumer("lpk", n), n, c);
       }});

  add({"enumer-rda",
       "right-double-ascent polynomial at alpha = beta = -1/2 collapses to discriminant powers",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly mhalf = MPoly::constant(Rational(-1, 2));
         MPoly lhs = joint_dist({{{rda, "u"}, {LRmin, "x", -1}, {RLmin, "y", -1}},
                                 GroundSet::sym_plus_1,
                                 n},
                                c.threads)
                         .subst("x", mhalf)
                         .subst("y", mhalf) *
                     Rational(Int(1) << n);
         return compare_polys(lhs, closed_enumer("rda", n), n, c);
       }});

  add({"cor-lpk-des",
       "left peaks, two-sided double ascents and interior double descents with RLmin weight "
       "over S_n vs their EGF",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist(
             {{{lpk, "u1"}, {lpk, "u2"}, {lrda, "u3"}, {dd, "u4"}, {RLmin, "beta"}},
              GroundSet::sym,
              n},
             c.threads);
         return compare_polys(lhs, egf_coeff(gf_cor_lpk_des(n), n), n, c);
       }});

  add({"gf-pk-thm", "homogenized left-peak polynomial with RLmin weight vs its even-expansion "
                    "EGF",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         auto groups = grouped_dist(GroundSet::sym, n, {lpk, RLmin});
         MPoly u = var("u"), v = var("v"), beta = var("beta");
         MPoly lhs;
         for (const auto& [key, cnt] : groups)
           lhs += u.pow_int(2 * key[0]) * v.pow_int(n - 2 * key[0]) * beta.pow_int(key[1]) *
                  Rational(cnt);
         return compare_polys(lhs, egf_coeff(gf_pk_thm(n), n), n, c);
       }});

  add({"gf-lrda", "two-sided double ascents with RLmin weight over S_n vs EGF", "", true, true, 1,
       7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{lrda, "u"}, {RLmin, "beta"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_lrda(n), n), n, c);
       }});

  add({"gf-da", "interior double ascents with LRmin weight over S_n vs EGF", "", true, true, 1, 7,
       [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{da, "u"}, {LRmin, "alpha"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_da(n), n), n, c);
       }});

  add({"gf-pk-lr",
       "homogenized interior-peak polynomial with two-sided record weights over S_{n+1} vs EGF",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         auto groups = grouped_dist(GroundSet::sym, n + 1, {ipk, LRmin, RLmin});
         MPoly u = var("u"), v = var("v"), alpha = var("alpha"), beta = var("beta");
         MPoly lhs;
         for (const auto& [key, cnt] : groups)
           lhs += u.pow_int(2 * key[0]) * v.pow_int(n - 2 * key[0]) * alpha.pow_int(key[1] - 1) *
                  beta.pow_int(key[2] - 1) * Rational(cnt);
         return compare_polys(lhs, egf_coeff(gf_pk_lr(n), n), n, c);
       }});

  add({"gf-rda", "right double ascents with two-sided record weights over S_{n+1} vs EGF", "",
       true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist(
             {{{rda, "u"}, {LRmin, "alpha", -1}, {RLmin, "beta", -1}}, GroundSet::sym_plus_1, n},
             c.threads);
         return compare_polys(lhs, egf_coeff(gf_rda(n), n), n, c);
       }});

  add({"gf-lpk-gessel", "left-peak polynomial over S_n vs the reciprocal even-expansion EGF",
       "Gessel", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{lpk, "u"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_gessel_lpk(n), n), n, c);
       }});

  add({"gf-pk-davidbarton", "interior-peak polynomial over S_n vs the cosh-ratio EGF",
       "David-Barton", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{ipk, "u"}}, GroundSet::sym, n}, c.threads);
         Outcome o = compare_polys(lhs, egf_coeff(gf_davidbarton_pk(n), n), n, c);
         o.detail["annotation"] =
             "the classical form carries an extra weight symbol with no definition; it is fixed "
             "to v = 1 here";
         return o;
       }});

  add({"zhuang-da", "interior double ascent polynomial over S_n vs EGF", "Zhuang", true, true, 1,
       7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{da, "u"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_zhuang_da(n), n), n, c);
       }});

  add({"zhuang-rda", "right double ascent polynomial over S_n vs EGF", "Zhuang", true, true, 1, 7,
       [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{rda, "u"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_zhuang_rda(n), n), n, c);
       }});

  add({"zhuang-lrda", "two-sided double ascent polynomial over S_n vs EGF", "Zhuang", true, true,
       1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{lrda, "u"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_zhuang_lrda(n), n), n, c);
       }});

  add({"gf-brenti", "joint excedance/cycle polynomial over S_n vs the q-th power EGF", "Brenti",
       true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{exc, "x"}, {cyc, "q"}}, GroundSet::sym, n}, c.threads);
         return compare_polys(lhs, egf_coeff(gf_brenti(n), n), n, c);
       }});

  add({"stirling-special",
       "record-only specialization: the A-polynomial at x = y = 1, beta = 0 equals the LRmax "
       "distribution, the rising factorial in alpha, and the binomial-series EGF coefficient",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly one = MPoly::constant(1);
         MPoly p1 =
             a_poly(n, c.threads).subst("x", one).subst("y", one).subst("beta", MPoly::zero());
         MPoly p2 = joint_dist({{{LRmax, "alpha"}}, GroundSet::sym, n}, c.threads);
         MPoly p3 = rising_factorial(n, "alpha");
         MPoly p4 = egf_coeff(gf_stirling_special(n), n);
         const MPoly* legs[4] = {&p1, &p2, &p3, &p4};
         const char* names[3] = {"specialized-A vs LRmax-distribution",
                                 "LRmax-distribution vs rising-factorial",
                                 "rising-factorial vs EGF"};
         for (int i = 0; i < 3; ++i) {
           Outcome o = harness_detail::compare_polys(*legs[i], *legs[i + 1], n, c);
           if (!o.pass) {
             o.detail["leg"] = names[i];
             return o;
           }
         }
         return Outcome{};
       }});

  add({"foata-dist",
       "(exc, cyc) over S_n matches (des, LRmax) pushed through the cycle-to-word transform",
       "Foata", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly d1 = joint_dist({{{exc, "x"}, {cyc, "q"}}, GroundSet::sym, n}, c.threads);
         MPoly d2;
         int ix = var_index("x"), iq = var_index("q");
         for_each_perm(n, [&](std::span<const int> v) {
           Permutation p(std::vector<int>(v.begin(), v.end()), Permutation::unchecked_tag{});
           Permutation f = foata_first(p);
           d2.add_term(Monomial::from_entries(
                           {{ix, stat::des(f.span())}, {iq, stat::lr_max(f.span())}}),
                       1);
         });
         return compare_polys(d1, d2, n, c);
       }});

  add({"reduce-alpha0",
       "P-polynomial at alpha = 0 reduces to the left-peak refinement over S_n", "", true, true,
       1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = p_poly_min(n, c.threads).subst("alpha", MPoly::zero());
         MPoly rhs = joint_dist(
             {{{lpk, "u1"}, {lpk, "u2"}, {lrda, "u3"}, {dd, "u4"}, {RLmin, "beta"}},
              GroundSet::sym,
              n},
             c.threads);
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"main2-cora",
       "P-polynomial as a binomial convolution of balanced-weight A-polynomials against powers "
       "of (beta-alpha)(u3-u4)/2, on the linked-variable locus",
       "", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = p_poly(n, c.threads);
         std::vector<MPoly> ak;
         for (int k = 0; k <= n; ++k) ak.push_back(a_poly(k, c.threads));
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s, true);
               Rational al = a.at("alpha"), be = a.at("beta");
               Rational mid = (al + be) / 2;
               Assignment inner = a;
               inner["alpha"] = mid;
               inner["beta"] = mid;
               Rational lin = (be - al) * (a.at("u3") - a.at("u4")) / 2;
               Rational rv = 0;
               for (int k = 0; k <= n; ++k) {
                 Rational term =
                     Rational(binomial(n, k)) * ak[k].eval_by_name(inner) * rational_pow(lin, n - k);
                 rv += term;
               }
               return std::pair{lhs.eval_by_name(a), rv};
             },
             n, c);
       }});

  add({"main2-corb-1",
       "P-polynomial as a convolution of A_k(x,y|0,alpha+beta) against powers of "
       "(alpha x - beta y + (beta-alpha)u3), on the linked-variable locus",
       "", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = p_poly(n, c.threads);
         std::vector<MPoly> ak;
         for (int k = 0; k <= n; ++k) ak.push_back(a_poly(k, c.threads));
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s, true);
               Rational al = a.at("alpha"), be = a.at("beta");
               Assignment inner = a;
               inner["alpha"] = 0;
               inner["beta"] = Rational(al + be);
               Rational lin = al * a.at("x") - be * a.at("y") + (be - al) * a.at("u3");
               Rational rv = 0;
               for (int k = 0; k <= n; ++k)
                 rv += Rational(binomial(n, k)) * ak[k].eval_by_name(inner) *
                       rational_pow(lin, n - k);
               return std::pair{lhs.eval_by_name(a), rv};
             },
             n, c);
       }});

  add({"main2-corb-2",
       "P-polynomial as a convolution of A_k(x,y|alpha+beta,0) against powers of "
       "(alpha y - beta x + (beta-alpha)u3), on the linked-variable locus",
       "", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = p_poly(n, c.threads);
         std::vector<MPoly> ak;
         for (int k = 0; k <= n; ++k) ak.push_back(a_poly(k, c.threads));
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s, true);
               Rational al = a.at("alpha"), be = a.at("beta");
               Assignment inner = a;
               inner["alpha"] = Rational(al + be);
               inner["beta"] = 0;
               Rational lin = al * a.at("y") - be * a.at("x") + (be - al) * a.at("u3");
               Rational rv = 0;
               for (int k = 0; k <= n; ++k)
                 rv += Rational(binomial(n, k)) * ak[k].eval_by_name(inner) *
                       rational_pow(lin, n - k);
               return std::pair{lhs.eval_by_name(a), rv};
             },
             n, c);
       }});

  add({"stembridge",
       "2^(n-1) times the descent polynomial equals the interior-peak polynomial assembled as "
       "4^M x^M (1+x)^(n-1-2M)",
       "Stembridge; rediscovered by Branden", true, true, 1, 7,
       [](int n, const CheckContext& c) {
         MPoly x = var("x");
         MPoly lhs = joint_dist({{{des, "x"}}, GroundSet::sym, n}, c.threads) *
                     Rational(Int(1) << (n - 1));
         auto groups = grouped_dist(GroundSet::sym, n, {ipk});
         MPoly rhs;
         for (const auto& [key, cnt] : groups)
           rhs += x.pow_int(key[0]) * (MPoly::constant(1) + x).pow_int(n - 1 - 2 * key[0]) *
                  Rational(Int(cnt) << (2 * key[0]));
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"stembridge-ab",
       "record-weighted form of the peak-to-descent change of variables over S_n", "", true,
       true, 1, 7, [](int n, const CheckContext& c) {
         MPoly x = var("x"), y = var("y"), alpha = var("alpha"), beta = var("beta");
         MPoly avg = (x + y) * Rational(1, 2);
         MPoly wavg = (alpha + beta) * Rational(1, 2);
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {ipk, LRmin, RLmin}))
           lhs += (x * y).pow_int(key[0]) * avg.pow_int(n - 2 * key[0] - 1) *
                  alpha.pow_int(key[1] - 1) * beta.pow_int(key[2] - 1) * Rational(cnt);
         MPoly rhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {des, LRmin, RLmin}))
           rhs += x.pow_int(key[0]) * y.pow_int(n - 1 - key[0]) *
                  wavg.pow_int(key[1] + key[2] - 2) * Rational(cnt);
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"leftpk-stembridge",
       "descent polynomial over S_{n+1} with halved record weights equals the rescaled "
       "left-peak polynomial over S_n",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly x = var("x");
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n + 1, {des, LRmin, RLmin}))
           lhs += x.pow_int(key[0]) * (half_power(key[1] + key[2] - 2) * Rational(cnt));
         MPoly rhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {lpk}))
           rhs += x.pow_int(key[0]) * (MPoly::constant(1) + x).pow_int(n - 2 * key[0]) *
                  (Rational(Int(cnt) << (2 * key[0])) * half_power(n));
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"leftpk-stembridge-ab",
       "beta-weighted form of the left-peak-to-descent change of variables", "", true, true, 1,
       7, [](int n, const CheckContext& c) {
         MPoly x = var("x"), y = var("y"), beta = var("beta");
         MPoly avg = (x + y) * Rational(1, 2);
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {lpk, RLmin}))
           lhs += (x * y).pow_int(key[0]) * avg.pow_int(n - 2 * key[0]) * beta.pow_int(key[1]) *
                  Rational(cnt);
         MPoly rhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n + 1, {des, LRmin, RLmin}))
           rhs += x.pow_int(key[0]) * y.pow_int(n - key[0]) * beta.pow_int(key[1] + key[2] - 2) *
                  (half_power(key[1] + key[2] - 2) * Rational(cnt));
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"petersen",
       "left-peak polynomial as a binomial convolution of Eulerian polynomials against "
       "2^k (1-x)^(n-k)",
       "Petersen", true, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly x = var("x");
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {lpk}))
           lhs += x.pow_int(key[0]) * (MPoly::constant(1) + x).pow_int(n - 2 * key[0]) *
                  Rational(Int(cnt) << (2 * key[0]));
         MPoly one_minus_x = MPoly::constant(1) - x;
         MPoly rhs = one_minus_x.pow_int(n);
         for (int k = 1; k <= n; ++k)
           rhs += classical_eulerian(k) * one_minus_x.pow_int(n - k) *
                  Rational(Int(binomial(n, k)) << k);
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"petersen-beta", "beta-extension of the left-peak-to-Eulerian convolution", "", true,
       true, 1, 7, [](int n, const CheckContext& c) {
         MPoly x = var("x"), y = var("y"), beta = var("beta");
         MPoly avg = (x + y) * Rational(1, 2);
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {lpk, RLmin}))
           lhs += (x * y).pow_int(key[0]) * avg.pow_int(n - 2 * key[0]) * beta.pow_int(key[1]) *
                  Rational(cnt);
         MPoly lin = (y - x) * beta * Rational(1, 2);
         MPoly rhs = lin.pow_int(n);
         for (int k = 1; k <= n; ++k) {
           MPoly inner = joint_dist(
               {{{des, "x", 1}, {asc, "y"}, {LRmin, "beta"}}, GroundSet::sym, k}, c.threads);
           rhs += inner * lin.pow_int(n - k) * Rational(binomial(n, k));
         }
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"petersen-pk",
       "interior-peak analogue of the left-peak-to-Eulerian convolution over S_{n+1}", "", true,
       true, 1, 7, [](int n, const CheckContext& c) {
         MPoly x = var("x");
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n + 1, {ipk}))
           lhs += x.pow_int(key[0]) * (MPoly::constant(1) + x).pow_int(n - 2 * key[0]) *
                  (Rational(Int(cnt) << (2 * key[0])) * half_power(n));
         MPoly one_minus_x = MPoly::constant(1) - x;
         MPoly rhs = one_minus_x.pow_int(n);
         for (int k = 1; k <= n; ++k) {
           MPoly inner =
               joint_dist({{{des, "x", 1}, {LRmin, "q"}}, GroundSet::sym, k}, c.threads)
                   .subst("q", MPoly::constant(2));
           rhs += inner * one_minus_x.pow_int(n - k) * Rational(binomial(n, k));
         }
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"main-coraa",
       "two-parameter extension of the peak-to-Eulerian convolution over S_{n+1}", "", true,
       true, 1, 7, [](int n, const CheckContext& c) {
         MPoly x = var("x"), y = var("y"), alpha = var("alpha"), beta = var("beta");
         MPoly avg = (x + y) * Rational(1, 2);
         MPoly lhs;
         for (const auto& [key, cnt] :
              grouped_dist(GroundSet::sym, n + 1, {ipk, LRmin, RLmin}))
           lhs += (x * y).pow_int(key[0]) * avg.pow_int(n - 2 * key[0]) *
                  alpha.pow_int(key[1] - 1) * beta.pow_int(key[2] - 1) * Rational(cnt);
         MPoly lin = (alpha + beta) * (y - x) * Rational(1, 2);
         MPoly rhs = lin.pow_int(n);
         for (int k = 1; k <= n; ++k) {
           MPoly inner =
               joint_dist({{{des, "x", 1}, {asc, "y"}, {LRmin, "q"}}, GroundSet::sym, k},
                          c.threads)
                   .subst("q", alpha + beta);
           rhs += inner * lin.pow_int(n - k) * Rational(binomial(n, k));
         }
         return compare_polys(lhs, rhs, n, c);
       }});

  add({"zhuang-pk-des",
       "peak/descent polynomial vs the Eulerian polynomial rescaled by ((1+b)/(1+ab))^(n+1), on "
       "the rational root locus",
       "Zhuang", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{ipk, "u", 1}, {des, "v", 1}}, GroundSet::sym, n}, c.threads);
         MPoly eul = classical_eulerian(n);
         Outcome o = compare_at_points(
             [&](Sampler& s, Assignment& asg) {
               asg = sampling_desc(s);
               Rational a = asg.at("a"), b = asg.at("b");
               Rational ratio = (1 + b) / (1 + a * b);
               Rational rv = rational_pow(ratio, n + 1) * eul.eval_by_name({{"x", a}});
               return std::pair{lhs.eval_by_name(asg), rv};
             },
             n, c);
         if (o.pass) o.detail["note"] = "verified via equivalent form";
         return o;
       }});

  add({"zhuang-pk-ex",
       "alpha-extension: the peak/descent/ascent polynomial equals the descent/ascent "
       "polynomial under the root change of variables",
       "Zhuang", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly u = var("u"), v = var("v"), w = var("w"), x = var("x"), y = var("y"),
               alpha = var("alpha");
         MPoly lhs;
         for (const auto& [key, cnt] :
              grouped_dist(GroundSet::sym, n, {ipk, des, asc, LRmin, RLmin}))
           lhs += u.pow_int(key[0]) * v.pow_int(key[1]) * w.pow_int(key[2]) *
                  alpha.pow_int(key[3] + key[4] - 2) * Rational(cnt);
         MPoly rhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {des, asc, LRmin, RLmin}))
           rhs += x.pow_int(key[0]) * y.pow_int(key[1]) * alpha.pow_int(key[2] + key[3] - 2) *
                  Rational(cnt);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_uvw(s, true);
               return std::pair{lhs.eval_by_name(a), rhs.eval_by_name(a)};
             },
             n, c);
       }});

  add({"zhuang-lpk-des",
       "left-peak/descent polynomial vs the (1+b)^k (1-a)^(n-k) Eulerian convolution, on the "
       "rational root locus",
       "Zhuang", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly lhs = joint_dist({{{lpk, "u"}, {des, "v"}}, GroundSet::sym, n}, c.threads);
         std::vector<MPoly> eul(n + 1);
         for (int k = 1; k <= n; ++k) eul[k] = classical_eulerian(k);
         Outcome o = compare_at_points(
             [&](Sampler& s, Assignment& asg) {
               asg = sampling_desc(s);
               Rational a = asg.at("a"), b = asg.at("b");
               Rational acc = rational_pow(Rational(1 - a), n);
               for (int k = 1; k <= n; ++k) {
                 Rational term = Rational(binomial(n, k)) * rational_pow(Rational(1 + b), k) *
                                 rational_pow(Rational(1 - a), n - k) *
                                 eul[k].eval_by_name({{"x", a}});
                 acc += term;
               }
               Rational rv = acc / rational_pow(Rational(1 + a * b), n);
               return std::pair{lhs.eval_by_name(asg), rv};
             },
             n, c);
         if (o.pass) o.detail["note"] = "verified via equivalent form";
         return o;
       }});

  add({"zhuang-lpk-ex",
       "beta-extension of the left-peak/descent convolution under the root change of variables",
       "Zhuang", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly u = var("u"), v = var("v"), w = var("w");
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {lpk, des, RLmin}))
           lhs += u.pow_int(key[0]) * v.pow_int(key[1]) * w.pow_int(n - key[1]) *
                  var("beta").pow_int(key[2]) * Rational(cnt);
         std::vector<MPoly> inner(n + 1);
         for (int k = 1; k <= n; ++k)
           inner[k] = joint_dist(
               {{{des, "x", 1}, {asc, "y"}, {LRmin, "beta"}}, GroundSet::sym, k}, c.threads);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_uvw(s, false, true);
               Rational be = a.at("beta");
               Rational lin = be * (a.at("w") - a.at("x"));
               Rational rv = rational_pow(lin, n);
               for (int k = 1; k <= n; ++k)
                 rv += Rational(binomial(n, k)) * rational_pow(lin, n - k) *
                       inner[k].eval_by_name(a);
               return std::pair{lhs.eval_by_name(a), rv};
             },
             n, c);
       }});

  add({"main2-coraathm",
       "two-parameter peak/descent/ascent convolution against powers of "
       "(alpha y - beta x + (beta-alpha)w) under the root change of variables",
       "", false, true, 1, 7, [](int n, const CheckContext& c) {
         MPoly u = var("u"), v = var("v"), w = var("w"), alpha = var("alpha"), beta = var("beta");
         MPoly lhs;
         for (const auto& [key, cnt] :
              grouped_dist(GroundSet::sym, n + 1, {ipk, des, asc, LRmin, RLmin}))
           lhs += u.pow_int(key[0]) * v.pow_int(key[1]) * w.pow_int(key[2]) *
                  alpha.pow_int(key[3] - 1) * beta.pow_int(key[4] - 1) * Rational(cnt);
         std::vector<MPoly> inner(n + 1);
         for (int k = 1; k <= n; ++k)
           inner[k] = joint_dist(
               {{{des, "x", 1}, {asc, "y"}, {LRmin, "q"}}, GroundSet::sym, k}, c.threads);
         return compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_uvw(s, true, true);
               Rational al = a.at("alpha"), be = a.at("beta");
               Rational lin = al * a.at("y") - be * a.at("x") + (be - al) * a.at("w");
               Assignment ia = a;
               ia["q"] = Rational(al + be);
               Rational rv = rational_pow(lin, n);
               for (int k = 1; k <= n; ++k)
                 rv += Rational(binomial(n, k)) * rational_pow(lin, n - k) *
                       inner[k].eval_by_name(ia);
               return std::pair{lhs.eval_by_name(a), rv};
             },
             n, c);
       }});

  add({"euler-sign",
       "the signed excedance sum over S_n vanishes for even n and equals the signed zigzag "
       "number for odd n",
       "Euler", true, false, 1, 9, [](int n, const CheckContext&) {
         Int lv = 0;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {exc}))
           lv += key[0] % 2 ? -Int(cnt) : Int(cnt);
         Int rv = 0;
         if (n % 2 == 1) {
           rv = euler_number(n);
           if (((n - 1) / 2) % 2) rv = -rv;
         }
         return compare_scalars(Rational(lv), Rational(rv));
       }});

  add({"roselle",
       "the signed excedance sum over derangements vanishes for odd n and equals the signed "
       "zigzag number for even n",
       "Roselle", true, false, 1, 9, [](int n, const CheckContext&) {
         Int lv = 0;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::derangements, n, {exc}))
           lv += key[0] % 2 ? -Int(cnt) : Int(cnt);
         Int rv = 0;
         if (n % 2 == 0) {
           rv = euler_number(n);
           if ((n / 2) % 2) rv = -rv;
         }
         return compare_scalars(Rational(lv), Rational(rv));
       }});

  add({"roselle-varia",
       "the signed descent sum over S_{n+1} with halved record weights equals the signed "
       "zigzag number for even n and vanishes for odd n",
       "", true, false, 1, 8, [](int n, const CheckContext&) {
         Rational lv = 0;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n + 1, {des, LRmin, RLmin})) {
           Rational term = Rational(cnt) * half_power(key[1] + key[2] - 2);
           lv += key[0] % 2 ? Rational(-term) : term;
         }
         Rational rv = 0;
         if (n % 2 == 0) {
           Int e = euler_number(n);
           rv = (n / 2) % 2 ? Rational(-e) : Rational(e);
         }
         return compare_scalars(lv, rv);
       }});

  add({"derangement-identity",
       "the signed descent sum over S_{n+1} with halved record weights equals the signed "
       "excedance sum over derangements of [n]",
       "", true, false, 1, 8, [](int n, const CheckContext&) {
         Rational lv = 0;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n + 1, {des, LRmin, RLmin})) {
           Rational term = Rational(cnt) * half_power(key[1] + key[2] - 2);
           lv += key[0] % 2 ? Rational(-term) : term;
         }
         Int rv = 0;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::derangements, n, {exc}))
           rv += key[0] % 2 ? -Int(cnt) : Int(cnt);
         return compare_scalars(lv, Rational(rv));
       }});

  add({"alt-updown",
       "the signed descent sum with averaged record weights matches the record polynomial of "
       "one alternating class; both orientations are tried and reported",
       "", true, false, 1, 7, [](int n, const CheckContext& c) {
         MPoly wavg = (var("alpha") + var("beta")) * Rational(1, 2);
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n, {des, LRmin, RLmin})) {
           MPoly term = wavg.pow_int(key[1] + key[2] - 2) * Rational(cnt);
           lhs += key[0] % 2 ? MPoly(-term) : term;
         }
         Outcome o;
         if (n % 2 == 0) {
           o.pass = lhs.is_zero();
           o.detail["orientation"] = "zero (even n)";
           if (!o.pass) o.detail["difference"] = mpoly_to_json(lhs);
           return o;
         }
         DistSpec spec{{{LRmin, "alpha", -1}, {RLmin, "beta", -1}}, GroundSet::up_down, n};
         MPoly ud = joint_dist(spec, c.threads);
         spec.ground = GroundSet::down_up;
         MPoly du = joint_dist(spec, c.threads);
         Rational sign = ((n - 1) / 2) % 2 ? -1 : 1;
         bool ud_ok = lhs == ud * sign;
         bool du_ok = lhs == du * sign;
         o.pass = ud_ok || du_ok;
         o.detail["orientation"] = ud_ok && du_ok ? "both" : ud_ok ? "up-down" : du_ok ? "down-up" : "neither";
         if (!o.pass) o.detail["difference"] = mpoly_to_json(lhs - ud * sign);
         return o;
       }});

  add({"alt-downup",
       "the signed descent sum over S_{n+1} with beta/2 record weights matches the RLmin "
       "polynomial of one alternating class; both orientations are tried and reported",
       "", true, false, 1, 7, [](int n, const CheckContext& c) {
         MPoly beta = var("beta");
         MPoly lhs;
         for (const auto& [key, cnt] : grouped_dist(GroundSet::sym, n + 1, {des, LRmin, RLmin})) {
           MPoly term = beta.pow_int(key[1] + key[2] - 2) *
                        (half_power(key[1] + key[2] - 2) * Rational(cnt));
           lhs += key[0] % 2 ? MPoly(-term) : term;
         }
         Outcome o;
         if (n % 2 == 1) {
           o.pass = lhs.is_zero();
           o.detail["orientation"] = "zero (odd n)";
           if (!o.pass) o.detail["difference"] = mpoly_to_json(lhs);
           return o;
         }
         DistSpec spec{{{RLmin, "beta"}}, GroundSet::down_up, n};
         MPoly du = joint_dist(spec, c.threads);
         spec.ground = GroundSet::up_down;
         MPoly ud = joint_dist(spec, c.threads);
         Rational sign = (n / 2) % 2 ? -1 : 1;
         bool du_ok = lhs == du * sign;
         bool ud_ok = lhs == ud * sign;
         o.pass = du_ok || ud_ok;
         o.detail["orientation"] = du_ok && ud_ok ? "both" : du_ok ? "down-up" : ud_ok ? "up-down" : "neither";
         if (!o.pass) o.detail["difference"] = mpoly_to_json(lhs - du * sign);
         return o;
       }});

  add({"grammar-g1",
       "the n-th formal derivative of y under the two-variable grammar equals x times the "
       "A-polynomial at alpha=0, beta=1",
       "Dumont", true, true, 1, 8, [](int n, const CheckContext& c) {
         Grammar g = grammar_g1();
         MPoly lhs = g.d_pow(var("y"), n);
         MPoly an =
             a_poly(n, c.threads).subst("alpha", MPoly::zero()).subst("beta", MPoly::constant(1));
         return compare_polys(lhs, var("x") * an, n, c);
       }});

  add({"grammar-P",
       "the n-th formal derivative of ab under the labeled grammar equals ab times the "
       "P-polynomial",
       "", true, true, 1, 7, [](int n, const CheckContext& c) {
         Grammar g = grammar_gtilde();
         MPoly ab = var("a") * var("b");
         return compare_polys(g.d_pow(ab, n), ab * p_poly(n, c.threads), n, c);
       }});

  add({"grammar-claim",
       "derivatives of u1u2 under the reduced grammar lie in the subring generated by u1u2 and "
       "u3+u4, and map onto the derivatives of xy",
       "", true, false, 1, 8, [](int n, const CheckContext& c) {
         Grammar gt = grammar_gtilde1();
         Grammar g1 = grammar_g1();
         MPoly p = gt.d_pow(var("u1") * var("u2"), n);
         auto rewritten = rewrite_balanced_es(p);
         if (!rewritten) {
           Outcome o;
           o.pass = false;
           o.detail["reason"] = "derivative is not expressible in u1*u2 and u3+u4";
           return o;
         }
         return compare_polys(*rewritten, g1.d_pow(var("x") * var("y"), n), n, c);
       }});

  add({"grammar-gen-u1",
       "generating-series multiplicativity gen(u1)^2 = gen(u1/u2) gen(u1u2), the closed Laurent "
       "derivative of u1/u2, and the linked-locus product form of gen(u1u2)",
       "", true, true, 1, 8, [](int n, const CheckContext& c) {
         Grammar g = grammar_gtilde1();
         MPoly u1 = var("u1");
         MPoly ratio = MPoly::term(
             Monomial::from_entries({{var_index("u1"), 1}, {var_index("u2"), -1}}), 1);
         MPoly prod = var("u1") * var("u2");
         Series gu1 = g.gen(u1, n);
         Series gratio = g.gen(ratio, n);
         Series gprod = g.gen(prod, n);
         Outcome o = compare_series(mul(gu1, gu1), mul(gratio, gprod), "multiplicativity");
         if (!o.pass) return o;
         MPoly closed = ratio * (var("u3") - var("u4")).pow_int(n);
         if (!(g.d_pow(ratio, n) == closed)) {
           o.pass = false;
           o.detail["part"] = "laurent-derivative";
           o.detail["difference"] = mpoly_to_json(g.d_pow(ratio, n) - closed);
           return o;
         }
         Series f = f_series(n);
         Series rhs = mul(mul(one_plus_var_f("y", f), one_plus_var_f("x", f)),
                          var("x") * var("y"));
         const MPoly& lc = gprod.coeff(n);
         const MPoly& rc = rhs.coeff(n);
         Outcome pts = compare_at_points(
             [&](Sampler& s, Assignment& a) {
               a = sampling_linked_uvars(s);
               return std::pair{lc.eval_by_name(a), rc.eval_by_name(a)};
             },
             n, c);
         if (!pts.pass) pts.detail["part"] = "linked-locus-product";
         return pts;
       }});

  add({"gen-g1", "grammar generating series: gen(y) = y(1+xF) and gen(x) = x(1+yF)", "", true,
       false, 1, 7, [](int n, const CheckContext&) {
         Grammar g = grammar_g1();
         Series f = f_series(n);
         Outcome o = compare_series(g.gen(var("y"), n),
                                    mul(one_plus_var_f("x", f), var("y")), "gen(y)");
         if (!o.pass) return o;
         return compare_series(g.gen(var("x"), n), mul(one_plus_var_f("y", f), var("x")),
                               "gen(x)");
       }});

  add({"labeling-insertion",
       "summing labeled weights over all single-slot insertions of a new maximum reproduces "
       "the grammar derivative of the weight",
       "", true, false, 1, 6, [](int n, const CheckContext&) {
         Outcome o;
         o.pass = verify_insertion_cases(n);
         if (!o.pass) o.detail["reason"] = "insertion weights do not match the grammar derivative";
         return o;
       }});

  return reg;
}

inline const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> reg = build_registry();
  return reg;
}

inline const CheckInfo& find_check(std::string_view id) {
  for (const auto& info : registry())
    if (info.id == id) return info;
  throw UnknownCheck(std::string(id));
}

inline CheckRecord run_one(const CheckInfo& info, int n, const CheckConfig& cfg) {
  CheckRecord rec;
  rec.id = info.id;
  rec.n = n;
  RunMode m = cfg.mode;
  if (m == RunMode::preferred) m = info.symbolic_capable ? RunMode::symbolic : RunMode::points;
  rec.mode = m == RunMode::symbolic ? "symbolic" : "points";
  bool capable = m == RunMode::symbolic ? info.symbolic_capable : info.points_capable;
  if (!capable) {
    rec.status = "skipped";
    rec.detail["reason"] = std::string("check supports only ") +
                           (info.symbolic_capable ? "symbolic" : "points") + " mode";
    return rec;
  }
  CheckContext ctx{info.id, m, cfg.points, cfg.seed, cfg.threads};
  auto start = std::chrono::steady_clock::now();
  Outcome o = info.run(n, ctx);
  auto stop = std::chrono::steady_clock::now();
  if (cfg.timings)
    rec.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  rec.status = o.pass ? "pass" : "fail";
  rec.detail = std::move(o.detail);
  return rec;
}

inline Report run_checks(const std::vector<CheckInfo>& infos, const CheckConfig& cfg) {
  Report rep;
  for (const auto& info : infos) {
    int hi = cfg.n_max > 0 ? cfg.n_max : info.n_max;
    for (int n = info.n_min; n <= hi; ++n) rep.checks.push_back(run_one(info, n, cfg));
  }
  return rep;
}

inline Report run_suite(const CheckConfig& cfg) {
  std::vector<CheckInfo> selected;
  if (cfg.ids.empty()) {
    selected = registry();
  } else {
    for (const auto& id : cfg.ids) selected.push_back(find_check(id));
  }
  return run_checks(selected, cfg);
}

inline Json report_to_json(const Report& rep) {
  Json j;
  j["checks"] = Json::array();
  for (const auto& r : rep.checks) {
    Json e;
    e["id"] = r.id;
    e["n"] = r.n;
    e["mode"] = r.mode;
    e["status"] = r.status;
    e["elapsed_ms"] = r.elapsed_ms;
    e["detail"] = r.detail;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

}  // namespace eulab
