#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wordeq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_square_int(const Int& v) {
  if (v < 0) return false;
  Int s = boost::multiprecision::sqrt(v);
  return s * s == v;
}

// Generalized binomial coefficient C(r,k) for rational r.
inline Rat binomial(const Rat& r, unsigned k) {
  Rat acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= (r - static_cast<int>(i)) / Rat(static_cast<int>(i) + 1);
  return acc;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a % p) * (b % p) % p;  // safe for p < 2^32
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1 = 0, y1 = 0;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t x = 0, y = 0;
  std::int64_t g = ext_gcd(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m), x, y);
  if (g != 1 && g != -1) throw std::invalid_argument("inv_mod: arguments not coprime");
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((x % mm) + mm) % mm);
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace wordeq
