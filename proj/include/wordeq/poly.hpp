#pragma once

#include <wordeq/rational.hpp>
#include <wordeq/word.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordeq {

// Univariate polynomial with exact integer coefficients, c[i]*x^i.
// Invariant: empty (zero polynomial) or nonzero leading coefficient.
struct UnivarPoly {
  std::vector<Int> c;

  UnivarPoly() = default;
  explicit UnivarPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  static UnivarPoly constant(Int v) { return UnivarPoly({std::move(v)}); }
  static UnivarPoly monomial(int deg, Int coeff) {
    std::vector<Int> v(static_cast<std::size_t>(deg) + 1, Int(0));
    v.back() = std::move(coeff);
    return UnivarPoly(std::move(v));
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return Int(0);
    return c[static_cast<std::size_t>(i)];
  }

  bool operator==(const UnivarPoly&) const = default;

  UnivarPoly operator+(const UnivarPoly& o) const {
    std::vector<Int> v(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return UnivarPoly(std::move(v));
  }
  UnivarPoly operator-(const UnivarPoly& o) const {
    std::vector<Int> v(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) v[i] -= o.c[i];
    return UnivarPoly(std::move(v));
  }
  UnivarPoly operator*(const UnivarPoly& o) const {
    if (is_zero() || o.is_zero()) return UnivarPoly();
    std::vector<Int> v(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
    return UnivarPoly(std::move(v));
  }
  UnivarPoly operator*(const Int& s) const {
    std::vector<Int> v = c;
    for (auto& x : v) x *= s;
    return UnivarPoly(std::move(v));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  UnivarPoly derivative() const {
    if (c.size() <= 1) return UnivarPoly();
    std::vector<Int> v(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * Int(static_cast<long long>(i));
    return UnivarPoly(std::move(v));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Int a = c[i];
      bool neg = a < 0;
      if (neg) a = -a;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = a == 1;
      if (i == 0) {
        out += a.str();
      } else {
        if (!unit) out += a.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }
};

// Sparse bivariate polynomial over exact integers. Terms are keyed by
// (x-degree, y-degree) and kept in graded order (total degree, then x-degree)
// so rendering and serialization are canonical.
struct BivarPoly {
  struct GradedLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
      const int da = a.first + a.second, db = b.first + b.second;
      if (da != db) return da < db;
      return a.first < b.first;
    }
  };
  using TermMap = std::map<std::pair<int, int>, Int, GradedLess>;
  TermMap terms;

  BivarPoly() = default;

  static BivarPoly zero() { return BivarPoly(); }
  static BivarPoly constant(Int v) {
    BivarPoly p;
    p.add_term(0, 0, std::move(v));
    return p;
  }
  static BivarPoly monomial(int i, int j, Int coeff) {
    BivarPoly p;
    p.add_term(i, j, std::move(coeff));
    return p;
  }

  void add_term(int i, int j, Int coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(i, j);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }
  Int coeff(int i, int j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? Int(0) : it->second;
  }
  int max_x_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms) d = std::max(d, k.first);
    return d;
  }
  int max_y_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms) d = std::max(d, k.second);
    return d;
  }

  bool operator==(const BivarPoly& o) const { return terms == o.terms; }

  BivarPoly operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, v] : o.terms) r.add_term(k.first, k.second, v);
    return r;
  }
  BivarPoly operator-(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, v] : o.terms) r.add_term(k.first, k.second, -v);
    return r;
  }
  BivarPoly operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ka, va] : terms)
      for (const auto& [kb, vb] : o.terms) r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }

  Int eval(const Int& x, const Int& y) const {
    Int acc = 0;
    for (const auto& [k, v] : terms) {
      Int t = v;
      for (int i = 0; i < k.first; ++i) t *= x;
      for (int j = 0; j < k.second; ++j) t *= y;
      acc += t;
    }
    return acc;
  }

  // Coefficient of x^i as a polynomial in y.
  UnivarPoly coeff_in_x(int i) const {
    std::vector<Int> v;
    for (const auto& [k, c] : terms) {
      if (k.first != i) continue;
      if (static_cast<int>(v.size()) <= k.second) v.resize(static_cast<std::size_t>(k.second) + 1, Int(0));
      v[static_cast<std::size_t>(k.second)] = c;
    }
    return UnivarPoly(std::move(v));
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms) {
      Int a = v;
      bool neg = a < 0;
      if (neg) a = -a;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      if (k.first > 0) {
        mono += "x";
        if (k.first > 1) mono += "^" + std::to_string(k.first);
      }
      if (k.second > 0) {
        if (!mono.empty()) mono += "*";
        mono += "y";
        if (k.second > 1) mono += "^" + std::to_string(k.second);
      }
      if (mono.empty()) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += mono;
      }
    }
    return out;
  }
};

// P_w(x,y) = sum_{k=0}^{n-1} x^k y^{a_0+...+a_k}. Words with no X give 0.
inline BivarPoly word_polynomial(const Word& w) {
  BivarPoly p;
  const int n = w.x_count();
  int ysum = 0;
  for (int k = 0; k < n; ++k) {
    ysum += w.exponents[static_cast<std::size_t>(k)];
    p.add_term(k, ysum, Int(1));
  }
  return p;
}

inline BivarPoly substitute_squares(const BivarPoly& p) {
  BivarPoly r;
  for (const auto& [k, v] : p.terms) r.add_term(2 * k.first, 2 * k.second, v);
  return r;
}

// Substitution x -> x^n y^m, leaving y fixed.
inline BivarPoly substitute_x(const BivarPoly& p, int n, int m) {
  BivarPoly r;
  for (const auto& [k, v] : p.terms) r.add_term(k.first * n, k.second + k.first * m, v);
  return r;
}

// Both sides of the composition identity P_{u o w} = P_u(x^n y^m, y) P_w,
// where n and m count X's and A's in w. Each side is computed independently.
inline std::pair<BivarPoly, BivarPoly> poly_compose_identity(const Word& u, const Word& w) {
  auto ends_with_x = [](const Word& t) { return t.x_count() >= 1 && t.exponents.back() == 0; };
  if (!ends_with_x(u) || !ends_with_x(w))
    throw std::invalid_argument("poly_compose_identity: both words must end with X");
  BivarPoly lhs = word_polynomial(compose(u, w));
  const int n = w.x_count();
  const int m = static_cast<int>(w.a_count());
  BivarPoly rhs = substitute_x(word_polynomial(u), n, m) * word_polynomial(w);
  return {lhs, rhs};
}

// Top row of the image of w under X -> [[x,z],[0,1]], A -> [[y,0],[0,1]],
// computed by literal left-to-right 2x2 multiplication. Serves as an oracle
// for word_polynomial: the result equals (x^n y^m, P_w(x,y) z).
inline std::pair<Int, Int> affine_image(const Word& w, const Int& x, const Int& y, const Int& z) {
  Int scale = 1, shift = 0;
  auto mul_right = [&](const Int& a2, const Int& b2) {
    // [[s, t],[0,1]] * [[a2, b2],[0,1]] = [[s*a2, s*b2 + t],[0,1]]
    shift = scale * b2 + shift;
    scale = scale * a2;
  };
  const int n = w.x_count();
  for (int i = 0; i <= n; ++i) {
    for (int r = 0; r < w.exponents[static_cast<std::size_t>(i)]; ++r) mul_right(y, Int(0));
    if (i < n) mul_right(x, z);
  }
  return {scale, shift};
}

// Exact evaluation in the prime field F_p.
inline std::uint64_t eval_mod(const BivarPoly& p, std::uint64_t x, std::uint64_t y, std::uint32_t prime) {
  const std::uint64_t q = prime;
  std::uint64_t acc = 0;
  for (const auto& [k, v] : p.terms) {
    Int r = v % static_cast<long long>(q);
    if (r < 0) r += static_cast<long long>(q);
    std::uint64_t t = r.convert_to<std::uint64_t>();
    t = mul_mod(t, pow_mod(x, static_cast<std::uint64_t>(k.first), q), q);
    t = mul_mod(t, pow_mod(y, static_cast<std::uint64_t>(k.second), q), q);
    acc = (acc + t) % q;
  }
  return acc;
}

// A word ending in X is uniquely recoverable from its word polynomial.
inline Word word_from_polynomial(const BivarPoly& p) {
  const int n = static_cast<int>(p.terms.size());
  if (n == 0) throw std::invalid_argument("word_from_polynomial: zero polynomial");
  std::vector<int> ydeg(static_cast<std::size_t>(n), -1);
  for (const auto& [k, v] : p.terms) {
    if (v != 1 || k.first < 0 || k.first >= n || ydeg[static_cast<std::size_t>(k.first)] != -1)
      throw std::invalid_argument("word_from_polynomial: not a word polynomial");
    ydeg[static_cast<std::size_t>(k.first)] = k.second;
  }
  std::vector<int> exps;
  exps.reserve(static_cast<std::size_t>(n) + 1);
  int prev = 0;
  for (int k = 0; k < n; ++k) {
    if (ydeg[static_cast<std::size_t>(k)] < prev)
      throw std::invalid_argument("word_from_polynomial: y-degrees must be nondecreasing");
    exps.push_back(ydeg[static_cast<std::size_t>(k)] - prev);
    prev = ydeg[static_cast<std::size_t>(k)];
  }
  exps.push_back(0);
  return Word(std::move(exps));
}

}  // namespace wordeq
