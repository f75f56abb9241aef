#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "eulab/vartable.hpp"

namespace eulab {

// Sparse power product with integer (possibly negative, i.e. Laurent)
// exponents. Invariants: entries sorted by variable index, no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<int, int>;  // (variable index, exponent)

  Monomial() = default;

  static Monomial variable(int idx, int exp = 1) {
    Monomial m;
    if (exp != 0) m.e_.emplace_back(idx, exp);
    return m;
  }

  // Builds from unsorted (idx, exp) pairs, merging duplicates.
  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [idx, exp] : entries) {
      if (!m.e_.empty() && m.e_.back().first == idx)
        m.e_.back().second += exp;
      else
        m.e_.emplace_back(idx, exp);
    }
    std::erase_if(m.e_, [](const Entry& en) { return en.second == 0; });
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_unit() const { return e_.empty(); }
  int exponent(int idx) const {
    for (const auto& [v, ex] : e_)
      if (v == idx) return ex;
    return 0;
  }

  // Total degree = sum of exponents (may be negative for Laurent terms).
  long long degree() const {
    long long d = 0;
    for (const auto& [v, ex] : e_) d += ex;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
      if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
        r.e_.push_back(*a++);
      } else if (a == e_.end() || b->first < a->first) {
        r.e_.push_back(*b++);
      } else {
        int ex = a->second + b->second;
        if (ex != 0) r.e_.emplace_back(a->first, ex);
        ++a, ++b;
      }
    }
    return r;
  }

  // Quotient in the Laurent sense (always defined).
  Monomial laurent_div(const Monomial& o) const { return *this * o.inverse(); }

  Monomial inverse() const {
    Monomial r = *this;
    for (auto& [v, ex] : r.e_) ex = -ex;
    return r;
  }

  Monomial pow(int k) const {
    Monomial r = *this;
    if (k == 0) return Monomial();
    for (auto& [v, ex] : r.e_) ex *= k;
    return r;
  }

  // True polynomial divisibility: every exponent of o fits under this one.
  bool divisible_by(const Monomial& o) const {
    for (const auto& [v, ex] : o.e_)
      if (exponent(v) < ex) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  // Graded-lexicographic total order: lower total degree first; on ties the
  // power product with the smaller exponent at the first (canonical-order)
  // differing variable comes first, so e.g. y^2 < x*y < x^2.
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
      int va = a == e_.end() ? INT32_MAX : a->first;
      int vb = b == o.e_.end() ? INT32_MAX : b->first;
      if (va < vb) {  // `a` has a nonzero exponent on an earlier variable
        if (a->second != 0) return a->second <=> 0;
        ++a;
      } else if (vb < va) {
        if (b->second != 0) return 0 <=> b->second;
        ++b;
      } else {
        if (auto c = a->second <=> b->second; c != 0) return c;
        ++a, ++b;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Entry> e_;
};

}  // namespace eulab
