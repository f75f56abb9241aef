#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eulab/mpoly.hpp"
#include "eulab/perm.hpp"

namespace eulab {

struct OffsetUnderflow : std::domain_error {
  OffsetUnderflow(const std::string& stat, int value)
      : std::domain_error("statistic " + stat + " with offset gives negative exponent " +
                          std::to_string(value)) {}
};

struct UnknownId : std::invalid_argument {
  explicit UnknownId(const std::string& id) : std::invalid_argument("unknown id '" + id + "'") {}
};

enum class GroundSet { sym, sym_plus_1, derangements, down_up, up_down };

inline bool ground_admits(GroundSet g, std::span<const int> v) {
  switch (g) {
    case GroundSet::sym:
    case GroundSet::sym_plus_1: return true;
    case GroundSet::derangements: return is_derangement(v);
    case GroundSet::down_up: return is_down_up(v);
    case GroundSet::up_down: return is_up_down(v);
  }
  return false;
}

// One tracked statistic: contributes var^(stat + offset) to each weight.
struct DistTerm {
  StatId stat;
  std::string var;
  int offset = 0;
};

struct DistSpec {
  std::vector<DistTerm> terms;
  GroundSet ground = GroundSet::sym;
  int n = 0;  // the size parameter; ground sym_plus_1 enumerates S_{n+1}
};

namespace detail {

inline int ground_size(const DistSpec& spec) {
  return spec.ground == GroundSet::sym_plus_1 ? spec.n + 1 : spec.n;
}

template <class F>
void visit_ground(GroundSet g, int size, F&& f) {
  for_each_perm(size, [&](std::span<const int> v) {
    if (ground_admits(g, v)) f(v);
  });
}

template <class F>
void visit_ground_with_first(GroundSet g, int size, int first, F&& f) {
  for_each_perm_with_first(size, first, [&](std::span<const int> v) {
    if (ground_admits(g, v)) f(v);
  });
}

}  // namespace detail

// Joint distribution polynomial: sum over the ground set of
// prod_k var_k^(stat_k + offset_k). Raises OffsetUnderflow if any exponent
// would be negative. Enumeration partitions by first value when threads > 1;
// partial sums merge in partition order, so the result is identical to the
// sequential one.
inline MPoly joint_dist(const DistSpec& spec, int threads = 1) {
  int size = detail::ground_size(spec);
  std::vector<int> vars;
  vars.reserve(spec.terms.size());
  for (const auto& t : spec.terms) vars.push_back(var_index(t.var));

  auto accumulate = [&](std::span<const int> v, MPoly& into) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(spec.terms.size());
    for (size_t k = 0; k < spec.terms.size(); ++k) {
      int e = statistic(v, spec.terms[k].stat) + spec.terms[k].offset;
      if (e < 0) throw OffsetUnderflow(spec.terms[k].var, e);
      entries.emplace_back(vars[k], e);
    }
    into.add_term(Monomial::from_entries(std::move(entries)), 1);
  };

  if (threads <= 1 || size < 2) {
    MPoly out;
    detail::visit_ground(spec.ground, size, [&](std::span<const int> v) { accumulate(v, out); });
    return out;
  }

  std::vector<MPoly> parts(size);
  std::vector<std::exception_ptr> errors(size);
  std::vector<std::thread> pool;
  int workers = std::min(threads, size);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int first = w + 1; first <= size; first += workers) {
        try {
          detail::visit_ground_with_first(spec.ground, size, first,
                                          [&](std::span<const int> v) { accumulate(v, parts[first - 1]); });
        } catch (...) {
          errors[first - 1] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  MPoly out;
  for (int i = 0; i < size; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out += parts[i];
  }
  return out;
}

// --- the named polynomial families ------------------------------------------

// Two-sided Eulerian family over S_{n+1}: ascents, descents, and both
// boundary-record statistics (max flavor).
inline MPoly a_poly(int n, int threads = 1) {
  return joint_dist({{{StatId::asc, "x"},
                      {StatId::des, "y"},
                      {StatId::LRmax, "alpha", -1},
                      {StatId::RLmax, "beta", -1}},
                     GroundSet::sym_plus_1,
                     n},
                    threads);
}

// The same polynomial through the complement transport (min flavor).
inline MPoly a_poly_min(int n, int threads = 1) {
  return joint_dist({{{StatId::des, "x"},
                      {StatId::asc, "y"},
                      {StatId::LRmin, "alpha", -1},
                      {StatId::RLmin, "beta", -1}},
                     GroundSet::sym_plus_1,
                     n},
                    threads);
}

// Valley / exterior-peak / double-descent / double-ascent family over S_{n+1}
// (max flavor of the boundary records).
inline MPoly p_poly(int n, int threads = 1) {
  return joint_dist({{{StatId::val, "u1"},
                      {StatId::epk, "u2", -1},
                      {StatId::rdd, "u3"},
                      {StatId::lda, "u4"},
                      {StatId::LRmax, "alpha", -1},
                      {StatId::RLmax, "beta", -1}},
                     GroundSet::sym_plus_1,
                     n},
                    threads);
}

// Equal polynomial via the complement: interior peaks carry u1*u2, right
// double ascents u3, left double descents u4, min-flavor records.
inline MPoly p_poly_min(int n, int threads = 1) {
  return joint_dist({{{StatId::ipk, "u1"},
                      {StatId::ipk, "u2"},
                      {StatId::rda, "u3"},
                      {StatId::ldd, "u4"},
                      {StatId::LRmin, "alpha", -1},
                      {StatId::RLmin, "beta", -1}},
                     GroundSet::sym_plus_1,
                     n},
                    threads);
}

// sum_{S_n} x^(des+1), with the empty case fixed to 1 by convention.
inline MPoly classical_eulerian(int n) {
  if (n == 0) return MPoly::constant(1);
  return joint_dist({{{StatId::des, "x", 1}}, GroundSet::sym, n});
}

// var (var+1) (var+2) ... (var+n-1)
inline MPoly rising_factorial(int n, std::string_view var = "x") {
  MPoly r = MPoly::constant(1);
  MPoly v = MPoly::variable(var);
  for (int k = 0; k < n; ++k) r *= v + Rational(k);
  return r;
}

// Joint excedance/cycle distribution over S_n.
inline MPoly brenti_a(int n) {
  return joint_dist({{{StatId::exc, "x"}, {StatId::cyc, "q"}}, GroundSet::sym, n});
}

// Number of down-up permutations of [n] (tangent/secant counts), by direct
// enumeration. E_0 = E_1 = 1.
inline long long euler_number(int n) {
  long long c = 0;
  for_each_perm(n, [&](std::span<const int> v) { c += is_down_up(v); });
  return c;
}

// The closed form for 2^n P_n under the constraint beta = -1 - alpha:
//   sum_k C(n,2k) D^k (beta-alpha)^{n-2k} (u3-u4)^{n-2k}
//   - (u3+u4) sum_k C(n,2k+1) D^k (beta-alpha)^{n-2k-1} (u3-u4)^{n-2k-1},
// divided by 2^n, with D = (u3+u4)^2 - 4 u1 u2 and beta-alpha = -1-2*alpha.
inline MPoly explicit_main2ca(int n) {
  MPoly u1 = MPoly::variable("u1"), u2 = MPoly::variable("u2");
  MPoly u3 = MPoly::variable("u3"), u4 = MPoly::variable("u4");
  MPoly alpha = MPoly::variable("alpha");
  MPoly s = u3 + u4;
  MPoly disc = s * s - Rational(4) * u1 * u2;
  MPoly bma = MPoly::constant(-1) - Rational(2) * alpha;  // beta - alpha
  MPoly diff = (bma * (u3 - u4));
  MPoly even, odd;
  MPoly disc_k = MPoly::constant(1);
  for (int k = 0; 2 * k <= n; ++k) {
    even += disc_k * Rational(binomial(n, 2 * k)) * diff.pow_int(n - 2 * k);
    if (2 * k + 1 <= n)
      odd += disc_k * Rational(binomial(n, 2 * k + 1)) * diff.pow_int(n - 2 * k - 1);
    disc_k *= disc;
  }
  return (even - s * odd) * Rational(Int(1), Int(1) << n);
}

// Closed enumerators for the specialized alternating-weight sums.
//   pk:  +-(1-u)^{floor(n/2)}          (sign - for odd n)
//   lpk: +-(1-u)^{floor(n/2)}
//   rda: ((1+u)^2-4)^{floor(n/2)}, with an extra factor -(1+u) for odd n
inline MPoly closed_enumer(std::string_view which, int n) {
  MPoly u = MPoly::variable("u");
  if (which == "pk" || which == "lpk") {
    MPoly base = (Rational(1) - u).pow_int(n / 2);
    return n % 2 ? -base : base;
  }
  if (which == "rda") {
    MPoly disc = (u + Rational(1)) * (u + Rational(1)) - Rational(4);
    MPoly base = disc.pow_int(n / 2);
    return n % 2 ? MPoly(-(u + Rational(1)) * base) : base;
  }
  throw UnknownId(std::string(which));
}

// --- bulk statistic tables ----------------------------------------------------

// Distribution of every statistic over S_n at once, as polynomials in x.
// Parallel histogram accumulation, merged deterministically.
inline std::array<MPoly, kStatCount> stat_table(int n, int threads = 1) {
  using Hist = std::array<std::vector<long long>, kStatCount>;
  auto fresh = [&] {
    Hist h;
    for (auto& row : h) row.assign(n + 2, 0);
    return h;
  };
  auto sweep = [&](std::span<const int> v, Hist& h) {
    auto s = all_statistics(v);
    for (int k = 0; k < kStatCount; ++k) ++h[k][s[k]];
  };

  Hist total = fresh();
  if (threads <= 1 || n < 2) {
    for_each_perm(n, [&](std::span<const int> v) { sweep(v, total); });
  } else {
    std::vector<Hist> parts(n, fresh());
    std::vector<std::thread> pool;
    int workers = std::min(threads, n);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int first = w + 1; first <= n; first += workers)
          for_each_perm_with_first(n, first,
                                   [&](std::span<const int> v) { sweep(v, parts[first - 1]); });
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (int k = 0; k < kStatCount; ++k)
        for (size_t i = 0; i < part[k].size(); ++i) total[k][i] += part[k][i];
  }

  std::array<MPoly, kStatCount> out;
  int x = var_index("x");
  for (int k = 0; k < kStatCount; ++k)
    for (size_t i = 0; i < total[k].size(); ++i)
      if (total[k][i])
        out[k].add_term(Monomial::variable(x, static_cast<int>(i)), Rational(total[k][i]));
  return out;
}

// Grouped integer joint distribution: maps a statistic tuple to its count.
// This is the workhorse for identity checks — enumerate once, then assemble
// polynomials or evaluate at many rational points from the groups.
inline std::map<std::vector<int>, long long> grouped_dist(GroundSet ground, int size,
                                                          const std::vector<StatId>& stats) {
  std::map<std::vector<int>, long long> groups;
  std::vector<int> key(stats.size());
  detail::visit_ground(ground, size, [&](std::span<const int> v) {
    for (size_t k = 0; k < stats.size(); ++k) key[k] = statistic(v, stats[k]);
    ++groups[key];
  });
  return groups;
}

}  // namespace eulab
