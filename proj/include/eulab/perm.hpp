#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eulab {

struct DuplicateValue : std::invalid_argument {
  explicit DuplicateValue(int v)
      : std::invalid_argument("value " + std::to_string(v) + " appears more than once") {}
};

struct OutOfRange : std::invalid_argument {
  OutOfRange(int v, int n)
      : std::invalid_argument("value " + std::to_string(v) + " outside 1.." + std::to_string(n)) {}
};

// The twenty statistics, in canonical reporting order.
enum class StatId {
  des, asc, exc, cyc,
  LRmax, LRmin, RLmax, RLmin,
  lpk, ipk, epk, val,
  lda, da, rda, lrda,
  ldd, dd, rdd, lrdd,
};

inline constexpr int kStatCount = 20;

inline constexpr std::array<const char*, kStatCount> kStatNames = {
    "des", "asc", "exc", "cyc", "LRmax", "LRmin", "RLmax", "RLmin",
    "lpk", "ipk", "epk", "val", "lda", "da", "rda", "lrda",
    "ldd", "dd", "rdd", "lrdd"};

inline const char* stat_name(StatId s) { return kStatNames[static_cast<int>(s)]; }

inline StatId stat_from_name(std::string_view name) {
  for (int i = 0; i < kStatCount; ++i)
    if (name == kStatNames[i]) return static_cast<StatId>(i);
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

// --- statistics on raw one-line notation -----------------------------------
//
// v holds values v[0..n-1] at positions 1..n. Boundary conventions vary per
// statistic and are encoded by the comparisons below, never by materializing
// sentinel entries:
//   lpk   peaks over 1 <= i < n with a 0 on the left boundary
//   ipk   peaks over 1 <  i < n (interior only)
//   epk   peaks over 1 <= i <= n with 0 on both boundaries
//   val   valleys over 1 <= i <= n with 0 on both boundaries
//   lda/da/rda/lrda   double ascents; left boundary 0, right boundary +inf
//   ldd/dd/rdd/lrdd   double descents; left boundary +inf, right boundary 0
namespace stat {

inline int des(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 0; i + 1 < n; ++i) c += v[i] > v[i + 1];
  return c;
}

inline int asc(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 0; i + 1 < n; ++i) c += v[i] < v[i + 1];
  return c;
}

inline int exc(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 0; i + 1 < n; ++i) c += v[i] > i + 1;  // position n can never exceed
  return c;
}

inline int cyc(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  uint32_t seen = 0;  // n <= 31 everywhere in this library
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1) continue;
    ++c;
    for (int j = i; !(seen >> j & 1); j = v[j] - 1) seen |= uint32_t(1) << j;
  }
  return c;
}

inline int lr_max(std::span<const int> v) {
  int best = 0, c = 0;
  for (int x : v)
    if (x > best) best = x, ++c;
  return c;
}

inline int lr_min(std::span<const int> v) {
  int best = INT32_MAX, c = 0;
  for (int x : v)
    if (x < best) best = x, ++c;
  return c;
}

inline int rl_max(std::span<const int> v) {
  int best = 0, c = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (*it > best) best = *it, ++c;
  return c;
}

inline int rl_min(std::span<const int> v) {
  int best = INT32_MAX, c = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (*it < best) best = *it, ++c;
  return c;
}

inline int lpk(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i < n; ++i)  // position i, 1-based; right neighbor must exist
    c += (i == 1 ? 0 : v[i - 2]) < v[i - 1] && v[i - 1] > v[i];
  return c;
}

inline int ipk(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 2; i < n; ++i) c += v[i - 2] < v[i - 1] && v[i - 1] > v[i];
  return c;
}

inline int epk(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i <= n; ++i)
    c += (i == 1 ? 0 : v[i - 2]) < v[i - 1] && (i == n || v[i - 1] > v[i]);
  return c;
}

inline int val(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i <= n; ++i)
    c += (i == 1 ? 0 : v[i - 2]) > v[i - 1] && i != n && v[i - 1] < v[i];
  return c;
}

inline int lda(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i < n; ++i) c += (i == 1 ? 0 : v[i - 2]) < v[i - 1] && v[i - 1] < v[i];
  return c;
}

inline int da(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 2; i < n; ++i) c += v[i - 2] < v[i - 1] && v[i - 1] < v[i];
  return c;
}

inline int rda(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 2; i <= n; ++i) c += v[i - 2] < v[i - 1] && (i == n || v[i - 1] < v[i]);
  return c;
}

inline int lrda(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i <= n; ++i)
    c += (i == 1 ? 0 : v[i - 2]) < v[i - 1] && (i == n || v[i - 1] < v[i]);
  return c;
}

inline int ldd(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i < n; ++i) c += (i == 1 || v[i - 2] > v[i - 1]) && v[i - 1] > v[i];
  return c;
}

inline int dd(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 2; i < n; ++i) c += v[i - 2] > v[i - 1] && v[i - 1] > v[i];
  return c;
}

inline int rdd(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 2; i <= n; ++i) c += v[i - 2] > v[i - 1] && (i == n || v[i - 1] > v[i]);
  return c;
}

inline int lrdd(std::span<const int> v) {
  int n = static_cast<int>(v.size()), c = 0;
  for (int i = 1; i <= n; ++i)
    c += (i == 1 || v[i - 2] > v[i - 1]) && (i == n || v[i - 1] > v[i]);
  return c;
}

}  // namespace stat

inline int statistic(std::span<const int> v, StatId s) {
  using namespace stat;
  switch (s) {
    case StatId::des: return des(v);
    case StatId::asc: return asc(v);
    case StatId::exc: return exc(v);
    case StatId::cyc: return cyc(v);
    case StatId::LRmax: return lr_max(v);
    case StatId::LRmin: return lr_min(v);
    case StatId::RLmax: return rl_max(v);
    case StatId::RLmin: return rl_min(v);
    case StatId::lpk: return lpk(v);
    case StatId::ipk: return ipk(v);
    case StatId::epk: return epk(v);
    case StatId::val: return val(v);
    case StatId::lda: return lda(v);
    case StatId::da: return da(v);
    case StatId::rda: return rda(v);
    case StatId::lrda: return lrda(v);
    case StatId::ldd: return ldd(v);
    case StatId::dd: return dd(v);
    case StatId::rdd: return rdd(v);
    case StatId::lrdd: return lrdd(v);
  }
  throw std::logic_error("unreachable");
}

inline std::array<int, kStatCount> all_statistics(std::span<const int> v) {
  std::array<int, kStatCount> out;
  for (int i = 0; i < kStatCount; ++i) out[i] = statistic(v, static_cast<StatId>(i));
  return out;
}

// --- Permutation value type --------------------------------------------------

// A permutation of {1..n} in one-line notation. n = 0 (the empty permutation)
// is a valid value; every statistic on it is 0.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), unchecked_tag{});
  }

  static Permutation from_one_line(std::vector<int> v) {
    int n = static_cast<int>(v.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : v) {
      if (x < 1 || x > n) throw OutOfRange(x, n);
      if (seen[x]++) throw DuplicateValue(x);
    }
    return Permutation(std::move(v), unchecked_tag{});
  }

  static Permutation from_string(std::string_view text) {
    std::vector<int> v;
    std::istringstream is{std::string(text)};
    int x;
    while (is >> x) v.push_back(x);
    if (!is.eof()) throw std::invalid_argument("permutation text must be whitespace-separated integers");
    return from_one_line(std::move(v));
  }

  // For internal enumeration loops where validity is structural.
  struct unchecked_tag {};
  Permutation(std::vector<int> v, unchecked_tag) : v_(std::move(v)) {}

  int n() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& values() const { return v_; }
  std::span<const int> span() const { return v_; }
  int operator[](int pos) const { return v_[pos - 1]; }  // 1-based position

  bool operator==(const Permutation&) const = default;

  int statistic(StatId s) const { return eulab::statistic(v_, s); }
  std::array<int, kStatCount> all_statistics() const { return eulab::all_statistics(v_); }

  // sigma_i -> n+1-sigma_i
  Permutation complement() const {
    std::vector<int> r(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) r[i] = n() + 1 - v_[i];
    return Permutation(std::move(r), unchecked_tag{});
  }

  Permutation reverse() const {
    std::vector<int> r(v_.rbegin(), v_.rend());
    return Permutation(std::move(r), unchecked_tag{});
  }

  Permutation inverse() const {
    std::vector<int> r(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) r[v_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(r), unchecked_tag{});
  }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(v_[i]);
    }
    return s;
  }

 private:
  std::vector<int> v_;
};

// Cycle decomposition in canonical form: each cycle is written with its
// maximum first, and cycles are listed by increasing maxima.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  int n = p.n();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int j = start;
    do {
      seen[j] = 1;
      cyc.push_back(j);
      j = p[j];
    } while (j != start);
    auto mx = std::max_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mx, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

// First fundamental transformation: canonical cycle form with parentheses
// erased. Sends the pair (exc, cyc) to a (des, LRmax)-equidistributed image.
inline Permutation foata_first(const Permutation& p) {
  std::vector<int> word;
  word.reserve(p.n());
  for (const auto& cyc : cycle_decomposition(p))
    word.insert(word.end(), cyc.begin(), cyc.end());
  return Permutation(std::move(word), Permutation::unchecked_tag{});
}

// Inverse: cut the word before every left-to-right maximum; each block is a
// cycle with its maximum first.
inline Permutation foata_first_inv(const Permutation& w) {
  int n = w.n();
  std::vector<int> img(n + 1, 0);
  int best = 0, block = 0;
  const auto& v = w.values();
  for (int i = 0; i < n; ++i) {
    if (v[i] > best) {  // left-to-right maximum starts a new cycle
      if (i > 0) img[v[i - 1]] = block;
      best = block = v[i];
    } else {
      img[v[i - 1]] = v[i];
    }
  }
  if (n > 0) img[v[n - 1]] = block;
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = img[i];
  return Permutation(std::move(out), Permutation::unchecked_tag{});
}

// sigma_1 > sigma_2 < sigma_3 > ... ; vacuously true for n <= 1.
inline bool is_down_up(std::span<const int> v) {
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    if (i % 2 == 0 ? v[i] < v[i + 1] : v[i] > v[i + 1]) return false;
  }
  return true;
}

inline bool is_up_down(std::span<const int> v) {
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    if (i % 2 == 0 ? v[i] > v[i + 1] : v[i] < v[i + 1]) return false;
  }
  return true;
}

inline bool is_derangement(std::span<const int> v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == static_cast<int>(i) + 1) return false;
  return true;
}

inline bool is_down_up(const Permutation& p) { return is_down_up(p.span()); }
inline bool is_up_down(const Permutation& p) { return is_up_down(p.span()); }
inline bool is_derangement(const Permutation& p) { return is_derangement(p.span()); }

// --- enumeration -------------------------------------------------------------

// Visits the one-line notations of S_n in lexicographic order. The callback
// receives a span that is only valid during the call.
template <class F>
void for_each_perm(int n, F&& f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(std::span<const int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// The lexicographic block of S_n whose first value is `first` (1 <= first <= n).
// Concatenating the blocks for first = 1..n reproduces for_each_perm(n) order,
// which is what makes parallel accumulation deterministic.
template <class F>
void for_each_perm_with_first(int n, int first, F&& f) {
  if (n <= 0) return;
  std::vector<int> v(n);
  v[0] = first;
  int fill = 1;
  for (int x = 1; x <= n; ++x)
    if (x != first) v[fill++] = x;
  do {
    f(std::span<const int>(v));
  } while (std::next_permutation(v.begin() + 1, v.end()));
}

inline std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  for_each_perm(n, [&](std::span<const int> v) {
    out.emplace_back(std::vector<int>(v.begin(), v.end()), Permutation::unchecked_tag{});
  });
  return out;
}

}  // namespace eulab
