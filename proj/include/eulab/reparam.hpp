#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>

#include "eulab/mpoly.hpp"

namespace eulab {

using Assignment = std::map<std::string, Rational>;

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// One RNG per (seed, check id, n): point sequences do not depend on the order
// checks happen to run in.
inline std::mt19937_64 check_rng(std::uint64_t seed, std::string_view id, int n) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ull ^ fnv1a(id) ^
                         static_cast<std::uint64_t>(n));
}

// Small random rationals: numerators in [-9, 9], denominators in [1, 9].
class Sampler {
 public:
  explicit Sampler(std::mt19937_64 eng) : eng_(std::move(eng)) {}

  Rational rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(eng_), den(eng_));
  }

  Rational nonzero() {
    for (;;) {
      Rational r = rat();
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Independent nonzero values for every listed variable.
inline Assignment assign_free(Sampler& s, const std::set<std::string>& vars) {
  Assignment a;
  for (const auto& v : vars) a[v] = s.nonzero();
  return a;
}

// x, y, u3 free with x != y; then u4 := x+y-u3, u1 := 1, u2 := x*y, so that
// u3+u4 = x+y and u1*u2 = x*y. Optionally alpha, beta free.
inline Assignment sampling_linked_uvars(Sampler& s, bool with_ab = false) {
  Rational x = s.nonzero(), y = s.nonzero();
  while (y == x) y = s.nonzero();
  Rational u3 = s.nonzero();
  Assignment a;
  a["x"] = x;
  a["y"] = y;
  a["u3"] = u3;
  a["u4"] = Rational(x + y - u3);
  a["u1"] = 1;
  a["u2"] = Rational(x * y);
  if (with_ab) {
    a["alpha"] = s.nonzero();
    a["beta"] = s.nonzero();
  }
  return a;
}

// x, y, w free with x != y, v := x+y-w != 0; then u := x*y/(v*w), so that
// v+w = x+y and u*v*w = x*y. Optionally alpha and/or beta free.
inline Assignment sampling_uvw(Sampler& s, bool with_alpha = false, bool with_beta = false) {
  Rational x, y, w, v;
  for (;;) {
    x = s.nonzero();
    y = s.nonzero();
    w = s.nonzero();
    if (x == y) continue;
    v = x + y - w;
    if (v != 0) break;
  }
  Assignment a;
  a["x"] = x;
  a["y"] = y;
  a["w"] = w;
  a["v"] = v;
  a["u"] = Rational(x * y / (v * w));
  if (with_alpha) a["alpha"] = s.nonzero();
  if (with_beta) a["beta"] = s.nonzero();
  return a;
}

// The w = 1 specialization used by the descent-only forms: x, y free with
// x != y, y != 0, x != 1, v := x+y-1 != 0; u := x*y/v, a := x/y,
// b := (y-1)/(1-x). Then 1+ab = (y-x)/(y(1-x)) is automatically nonzero.
inline Assignment sampling_desc(Sampler& s) {
  Rational x, y, v;
  for (;;) {
    x = s.nonzero();
    y = s.nonzero();
    if (x == y || x == 1) continue;
    v = x + y - 1;
    if (v != 0) break;
  }
  Assignment m;
  m["x"] = x;
  m["y"] = y;
  m["v"] = v;
  m["u"] = Rational(x * y / v);
  m["a"] = Rational(x / y);
  m["b"] = Rational((y - 1) / (1 - x));
  return m;
}

}  // namespace eulab
