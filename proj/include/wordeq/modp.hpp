#pragma once

#include <wordeq/poly.hpp>
#include <wordeq/rational.hpp>
#include <wordeq/word.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace wordeq {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = lo; p <= hi && p >= lo; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t best = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      best = d;
      n /= d;
    }
  }
  if (n > 1) best = n;
  return best;
}

// First pair of nonzero residues with P(x,y) = 0 mod p, scanning x ascending
// and, for each x, the specialized univariate polynomial in y over ascending
// nonzero y. Returns nullopt only after an exhaustive scan.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> find_nonzero_solution(const BivarPoly& poly,
                                                                                    std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("find_nonzero_solution: p must be an odd prime");
  std::vector<std::tuple<int, int, std::uint64_t>> reduced;
  int max_j = 0;
  for (const auto& [k, v] : poly.terms) {
    Int r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    std::uint64_t c = r.convert_to<std::uint64_t>();
    if (c == 0) continue;
    reduced.emplace_back(k.first, k.second, c);
    max_j = std::max(max_j, k.second);
  }
  if (reduced.empty()) return std::make_pair(1u, 1u);  // identically zero mod p

  std::vector<std::uint64_t> ycoef(static_cast<std::size_t>(max_j) + 1);
  for (std::uint32_t x = 1; x < p; ++x) {
    std::fill(ycoef.begin(), ycoef.end(), 0);
    for (const auto& [i, j, c] : reduced) {
      const std::uint64_t t = mul_mod(c, pow_mod(x, static_cast<std::uint64_t>(i), p), p);
      ycoef[static_cast<std::size_t>(j)] = (ycoef[static_cast<std::size_t>(j)] + t) % p;
    }
    bool any_nonconst = false;
    for (std::size_t j = 1; j < ycoef.size(); ++j) any_nonconst = any_nonconst || ycoef[j] != 0;
    if (!any_nonconst) {
      if (ycoef[0] == 0) return std::make_pair(x, 1u);
      continue;
    }
    for (std::uint32_t y = 1; y < p; ++y) {
      std::uint64_t acc = 0;
      for (std::size_t j = ycoef.size(); j-- > 0;) acc = (mul_mod(acc, y, p) + ycoef[j]) % p;
      if (acc == 0) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

// Nonzero residues a,b with 1 + a^2 + b^2 = 0 mod p, by exhaustive scan in
// lexicographic order. When only pairs with b = 0 exist, the repair
// substitution (a,b) -> (-1 + 1/4, a + a/4) is attempted; it fails (and the
// scan is genuinely empty) exactly at p = 5, where no such pair exists.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> sum_of_squares_witness(std::uint32_t p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("sum_of_squares_witness: p must be a prime >= 5");
  for (std::uint32_t a = 1; a < p; ++a) {
    const std::uint64_t base = (1 + mul_mod(a, a, p)) % p;
    for (std::uint32_t b = 1; b < p; ++b)
      if ((base + mul_mod(b, b, p)) % p == 0) return std::make_pair(a, b);
  }
  for (std::uint32_t a = 1; a < p; ++a) {
    if ((1 + mul_mod(a, a, p)) % p != 0) continue;
    const std::uint64_t inv4 = inv_mod(4 % p, p);
    const std::uint32_t a2 = static_cast<std::uint32_t>((p - 1 + inv4) % p);
    const std::uint32_t b2 = static_cast<std::uint32_t>((a + mul_mod(a, inv4, p)) % p);
    if (a2 != 0 && b2 != 0) return std::make_pair(a2, b2);
  }
  return std::nullopt;
}

// Smallest prime p > lower whose half-order q = (p-1)/2 is coprime to n and
// has no prime factor f <= smooth_bound sharing a factor with n. The default
// smooth bound is the largest prime factor of n. Direct search stands in for
// the arithmetic-progression construction, which guarantees termination.
inline std::uint32_t find_suitable_prime(std::uint64_t n, std::uint32_t lower,
                                         std::optional<std::uint64_t> smooth_bound = std::nullopt,
                                         std::uint32_t cap = 1000000) {
  if (n < 1) throw std::invalid_argument("find_suitable_prime: n >= 1 required");
  const std::uint64_t sb = smooth_bound ? *smooth_bound : largest_prime_factor(n);
  for (std::uint64_t p = std::max<std::uint64_t>(lower + 1, 3); p <= cap; ++p) {
    if (p % 2 == 0 || !is_prime(p)) continue;
    const std::uint64_t q = (p - 1) / 2;
    if (std::gcd(q, n) != 1) continue;
    bool ok = true;
    for (std::uint64_t f = 2; f <= sb && ok; ++f) {
      if (!is_prime(f) || q % f != 0) continue;
      ok = std::gcd(f, n) == 1;
    }
    if (ok) return static_cast<std::uint32_t>(p);
  }
  throw std::runtime_error("find_suitable_prime: no suitable prime found below cap " + std::to_string(cap));
}

struct ProfileEntry {
  std::uint32_t p = 0;
  bool solvable = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

struct PrimeProfile {
  Word word;
  std::uint32_t p_min = 0, p_max = 0;
  std::vector<ProfileEntry> entries;
  std::vector<std::uint32_t> exceptional;  // primes in range with no solution
};

// Scans P_w(x^2,y^2) = 0 over (F_p^*)^2 for every prime in [p_min, p_max].
// Witnesses are re-verified before they are stored.
inline PrimeProfile prime_profile(const Word& w, std::uint32_t p_min, std::uint32_t p_max) {
  if (w.x_count() < 1) throw std::invalid_argument("prime_profile: word must contain X");
  if (p_min < 3) throw std::invalid_argument("prime_profile: p_min >= 3 required");
  PrimeProfile profile;
  profile.word = w;
  profile.p_min = p_min;
  profile.p_max = p_max;
  const BivarPoly psq = substitute_squares(word_polynomial(w));
  for (std::uint32_t p : primes_in_range(p_min, p_max)) {
    ProfileEntry entry;
    entry.p = p;
    auto sol = find_nonzero_solution(psq, p);
    if (sol) {
      const auto [x, y] = *sol;
      if (x == 0 || y == 0 || eval_mod(psq, x, y, p) != 0)
        throw std::logic_error("prime_profile: scanner produced an invalid witness");
      entry.solvable = true;
      entry.witness = sol;
    } else {
      profile.exceptional.push_back(p);
    }
    profile.entries.push_back(entry);
  }
  return profile;
}

}  // namespace wordeq
