#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulab {

// Arbitrary-precision exact arithmetic. Rationals are always kept in lowest
// terms with positive denominator (the backend canonicalizes on every op).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

// r^e for any integer e; 0^0 = 1, 0^negative raises.
inline Rational rational_pow(const Rational& r, long long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) throw DivisionByZero();
    return Rational(0);
  }
  Rational base = r;
  unsigned long long k;
  if (e < 0) {
    base = Rational(1) / r;  // the (num, den) ctor rejects negative denominators
    k = static_cast<unsigned long long>(-e);
  } else {
    k = static_cast<unsigned long long>(e);
  }
  Rational acc = 1;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// Canonical text form: "num" when the denominator is 1, else "num/den".
inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Rational rational_from_string(std::string_view s) {
  try {
    return Rational(std::string(s));
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + std::string(s) + "'");
  }
}

}  // namespace eulab
