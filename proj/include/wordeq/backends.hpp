#pragma once

#include <wordeq/nc_series.hpp>
#include <wordeq/rational.hpp>
#include <wordeq/unipotent.hpp>
#include <wordeq/word.hpp>

#include <cmath>
#include <concepts>
#include <random>
#include <stdexcept>

namespace wordeq {

// Contract for a uniquely divisible group backend: identity, product,
// inverse, rational powers, and an equality test at the backend's exactness.
template <class B>
concept GroupBackend = requires(const B& b, const typename B::Element& g, const Rat& r) {
  typename B::Element;
  { b.identity() } -> std::same_as<typename B::Element>;
  { b.mul(g, g) } -> std::same_as<typename B::Element>;
  { b.inv(g) } -> std::same_as<typename B::Element>;
  { b.rational_power(g, r) } -> std::same_as<typename B::Element>;
  { b.equal(g, g) } -> std::same_as<bool>;
};

namespace detail {

inline Rat random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return Rat(num(rng), den(rng));
}

}  // namespace detail

struct UtBackend {
  using Element = UnipotentMatrix;
  int dim = 3;

  Element identity() const { return UnipotentMatrix::identity(dim); }
  Element mul(const Element& g, const Element& h) const { return g * h; }
  Element inv(const Element& g) const { return g.inverse(); }
  Element rational_power(const Element& g, const Rat& r) const { return ut_rational_power(g, r); }
  bool equal(const Element& g, const Element& h) const { return g == h; }

  Element random_element(std::mt19937_64& rng) const {
    UnipotentMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) m.set(i, j, detail::random_small_rational(rng));
    return m;
  }
};

struct SeriesBackend {
  using Element = NCSeries;
  int degree = 4;

  Element identity() const { return NCSeries::one(degree); }
  Element mul(const Element& g, const Element& h) const { return g * h; }
  Element inv(const Element& g) const { return series_inverse(g); }
  Element rational_power(const Element& g, const Rat& r) const { return series_rational_power(g, r); }
  bool equal(const Element& g, const Element& h) const { return g == h; }

  Element random_element(std::mt19937_64& rng) const {
    NCSeries s = NCSeries::one(degree);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int len = 1; len <= degree; ++len)
      for (std::uint64_t bits = 0; bits < (1ULL << len); ++bits)
        if (coin(rng)) s.set_coeff({static_cast<std::uint8_t>(len), bits}, detail::random_small_rational(rng));
    return s;
  }
};

// Positive reals under multiplication; a floating-point sanity oracle only.
struct RealBackend {
  using Element = double;
  double tol = 1e-9;

  Element identity() const { return 1.0; }
  Element mul(const Element& g, const Element& h) const { return g * h; }
  Element inv(const Element& g) const {
    require_positive(g);
    return 1.0 / g;
  }
  Element rational_power(const Element& g, const Rat& r) const {
    require_positive(g);
    return std::pow(g, rat_num(r).convert_to<double>() / rat_den(r).convert_to<double>());
  }
  bool equal(const Element& g, const Element& h) const {
    const double scale = std::max({1.0, std::fabs(g), std::fabs(h)});
    return std::fabs(g - h) <= tol * scale;
  }

  Element random_element(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> dist(0.5, 2.5);
    return dist(rng);
  }

 private:
  static void require_positive(double g) {
    if (!(g > 0.0)) throw std::domain_error("RealBackend: nonpositive input");
  }
};

template <GroupBackend B>
typename B::Element backend_pow_int(const B& backend, const typename B::Element& g, long long e) {
  if (e < 0) return backend_pow_int(backend, backend.inv(g), -e);
  typename B::Element acc = backend.identity();
  typename B::Element base = g;
  auto u = static_cast<unsigned long long>(e);
  while (u) {
    if (u & 1ULL) acc = backend.mul(acc, base);
    base = backend.mul(base, base);
    u >>= 1ULL;
  }
  return acc;
}

// w(x, a) evaluated left-to-right in the backend.
template <GroupBackend B>
typename B::Element eval_word_in(const B& backend, const Word& w, const typename B::Element& x,
                                 const typename B::Element& a) {
  typename B::Element acc = backend_pow_int(backend, a, w.exponents[0]);
  const int n = w.x_count();
  for (int i = 1; i <= n; ++i) {
    acc = backend.mul(acc, x);
    acc = backend.mul(acc, backend_pow_int(backend, a, w.exponents[static_cast<std::size_t>(i)]));
  }
  return acc;
}

// Word equation w(X, A) = B in product form: prod_i (A^{a_{i-1}} X) = B A^{-a_n}.
template <GroupBackend B>
std::pair<std::vector<typename B::Element>, typename B::Element> product_form(const B& backend, const Word& w,
                                                                              const typename B::Element& a,
                                                                              const typename B::Element& b) {
  const int n = w.x_count();
  if (n < 1) throw std::invalid_argument("product_form: word must contain X");
  std::vector<typename B::Element> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) factors.push_back(backend_pow_int(backend, a, w.exponents[static_cast<std::size_t>(i)]));
  const typename B::Element rhs =
      backend.mul(b, backend_pow_int(backend, a, -static_cast<long long>(w.exponents.back())));
  return {factors, rhs};
}

}  // namespace wordeq
