#pragma once

#include <wordeq/modp.hpp>
#include <wordeq/poly.hpp>
#include <wordeq/rational.hpp>
#include <wordeq/word.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace wordeq {

// Element S^gamma T^beta of G_p, i.e. the affine map z -> t^beta z + gamma.
struct GpElement {
  std::uint32_t gamma = 0;  // residue mod p
  std::uint32_t beta = 0;   // residue mod q
  bool operator==(const GpElement&) const = default;
};

// The finite group G_p = (Z/qZ) x| (Z/pZ) with q = (p-1)/2, realized as the
// affine maps z -> t^k z + b over Z/pZ with quadratic-residue slope. The slope
// generator t is the square of the least primitive root mod p, so construction
// is deterministic; the discrete-log table over the q powers of t is built up
// front.
class GpGroup {
 public:
  explicit GpGroup(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("GpGroup: p must be an odd prime");
    q_ = (p - 1) / 2;
    const std::uint32_t g = smallest_primitive_root(p);
    t_ = static_cast<std::uint32_t>(mul_mod(g, g, p));
    t_pow_.resize(q_);
    dlog_.assign(p_, -1);
    std::uint64_t acc = 1;
    for (std::uint32_t k = 0; k < q_; ++k) {
      t_pow_[k] = static_cast<std::uint32_t>(acc);
      if (dlog_[acc] != -1) throw std::logic_error("GpGroup: t does not have order q");
      dlog_[acc] = static_cast<int>(k);
      acc = mul_mod(acc, t_, p_);
    }
    if (acc != 1) throw std::logic_error("GpGroup: t^q != 1");
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t t() const { return t_; }
  std::uint64_t order() const { return static_cast<std::uint64_t>(p_) * q_; }

  GpElement identity() const { return {0, 0}; }
  GpElement S() const { return {1, 0}; }
  GpElement T() const { return {0, 1 % q_}; }

  GpElement element(std::uint32_t gamma, std::uint32_t beta) const {
    if (gamma >= p_ || beta >= q_) throw std::invalid_argument("GpGroup::element: residue out of range");
    return {gamma, beta};
  }

  std::uint32_t t_power(std::uint32_t k) const { return t_pow_[k % q_]; }

  // Discrete log base t; defined exactly on the quadratic residues mod p.
  std::uint32_t dlog(std::uint32_t residue) const {
    if (residue >= p_ || dlog_[residue] < 0)
      throw std::invalid_argument("GpGroup::dlog: residue is not a power of t");
    return static_cast<std::uint32_t>(dlog_[residue]);
  }

  GpElement mul(const GpElement& g1, const GpElement& g2) const {
    // [[t^b1, c1],[0,1]] * [[t^b2, c2],[0,1]]
    const std::uint64_t gamma = (g1.gamma + mul_mod(t_pow_[g1.beta], g2.gamma, p_)) % p_;
    return {static_cast<std::uint32_t>(gamma), (g1.beta + g2.beta) % q_};
  }

  GpElement inv(const GpElement& g) const {
    const std::uint32_t beta = (q_ - g.beta) % q_;
    const std::uint64_t tneg = t_pow_[beta];
    const std::uint64_t gamma = (p_ - mul_mod(tneg, g.gamma, p_)) % p_;
    return {static_cast<std::uint32_t>(gamma), beta};
  }

  GpElement pow(const GpElement& g, long long e) const {
    if (e < 0) return pow(inv(g), -e);
    GpElement acc = identity();
    GpElement base = g;
    auto u = static_cast<unsigned long long>(e);
    while (u) {
      if (u & 1ULL) acc = mul(acc, base);
      base = mul(base, base);
      u >>= 1ULL;
    }
    return acc;
  }

  // Unique m-th root g^r with r*m = 1 mod #G; requires gcd(m, #G) = 1.
  GpElement mth_root(const GpElement& g, long long m) const {
    if (m < 1) throw std::invalid_argument("GpGroup::mth_root: m >= 1 required");
    const std::uint64_t N = order();
    const std::uint64_t mr = static_cast<std::uint64_t>(m) % N;
    if (mr == 0 || std::gcd(mr, N) != 1)
      throw std::invalid_argument("GpGroup::mth_root: gcd(m, #G) != 1, root may not exist or be unique");
    const std::uint64_t r = inv_mod(mr, N);
    return pow(g, static_cast<long long>(r));
  }

  // Literal left-to-right product of the word with X and a substituted.
  GpElement eval_word(const Word& w, const GpElement& x, const GpElement& a) const {
    GpElement acc = pow(a, w.exponents[0]);
    const int n = w.x_count();
    for (int i = 1; i <= n; ++i) {
      acc = mul(acc, x);
      acc = mul(acc, pow(a, w.exponents[static_cast<std::size_t>(i)]));
    }
    return acc;
  }

  // Right-hand side of the normal-form identity
  //   w(S^gamma T^beta, T^alpha) = S^{gamma P_w(t^beta, t^alpha)} T^{alpha m + beta n},
  // computed from the word polynomial; independent of eval_word.
  GpElement eval_word_via_polynomial(const Word& w, std::uint32_t gamma, std::uint32_t beta, std::uint32_t alpha) const {
    if (gamma >= p_ || beta >= q_ || alpha >= q_)
      throw std::invalid_argument("GpGroup::eval_word_via_polynomial: residue out of range");
    const std::uint64_t pw = eval_mod(word_polynomial(w), t_pow_[beta], t_pow_[alpha], p_);
    const std::uint64_t m = static_cast<std::uint64_t>(w.a_count());
    const std::uint64_t n = static_cast<std::uint64_t>(w.x_count());
    const std::uint32_t g = static_cast<std::uint32_t>(mul_mod(gamma, pw, p_));
    const std::uint32_t b = static_cast<std::uint32_t>((alpha % q_ * (m % q_) + beta % q_ * (n % q_)) % q_);
    return {g, b};
  }

  struct Counterexample {
    std::uint32_t x = 0, y = 0;      // nonzero residues with P_w(x^2,y^2) = 0 mod p
    std::uint32_t delta = 0, alpha = 0;  // x^2 = t^delta, y^2 = t^alpha
    GpElement a, b;                  // a = T^alpha, b = S T^{alpha m + delta n}
  };

  // Builds (a, b) with w(X, a) = b unsolvable in G_p, from a nonzero mod-p
  // point of P_w(x^2, y^2). Requires gcd(n, q) = 1 for the number n of X's.
  std::optional<Counterexample> construct_counterexample(const Word& w) const {
    const std::uint64_t n = static_cast<std::uint64_t>(w.x_count());
    if (std::gcd(n, static_cast<std::uint64_t>(q_)) != 1)
      throw std::invalid_argument("construct_counterexample: hypothesis gcd(n, q) = 1 violated for p=" +
                                  std::to_string(p_));
    const BivarPoly psq = substitute_squares(word_polynomial(w));
    auto sol = find_nonzero_solution(psq, p_);
    if (!sol) return std::nullopt;
    Counterexample ce;
    ce.x = sol->first;
    ce.y = sol->second;
    ce.delta = dlog(static_cast<std::uint32_t>(mul_mod(ce.x, ce.x, p_)));
    ce.alpha = dlog(static_cast<std::uint32_t>(mul_mod(ce.y, ce.y, p_)));
    const std::uint64_t m = static_cast<std::uint64_t>(w.a_count());
    ce.a = {0, ce.alpha};
    ce.b = {1, static_cast<std::uint32_t>((ce.alpha * (m % q_) + ce.delta * (n % q_)) % q_)};
    return ce;
  }

  // Exhaustive check that w(X, a) != b for every X in G_p.
  bool verify_no_solution(const Word& w, const GpElement& a, const GpElement& b) const {
    for (std::uint32_t gamma = 0; gamma < p_; ++gamma)
      for (std::uint32_t beta = 0; beta < q_; ++beta)
        if (eval_word(w, {gamma, beta}, a) == b) return false;
    return true;
  }

  // Two distinct elements with equal word value, via the full value table.
  // Returns nullopt exactly when g -> w(g, a) is a bijection.
  std::optional<std::tuple<GpElement, GpElement, GpElement>> find_collision(const Word& w,
                                                                            const GpElement& a) const {
    std::unordered_map<std::uint64_t, GpElement> seen;
    seen.reserve(order());
    for (std::uint32_t gamma = 0; gamma < p_; ++gamma) {
      for (std::uint32_t beta = 0; beta < q_; ++beta) {
        const GpElement g{gamma, beta};
        const GpElement val = eval_word(w, g, a);
        const std::uint64_t key = static_cast<std::uint64_t>(val.gamma) * q_ + val.beta;
        auto [it, inserted] = seen.emplace(key, g);
        if (!inserted) return std::make_tuple(it->second, g, val);
      }
    }
    return std::nullopt;
  }

 private:
  static std::uint32_t smallest_primitive_root(std::uint32_t p) {
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) factors.push_back(m);
    for (std::uint32_t g = 2; g < p; ++g) {
      bool ok = true;
      for (std::uint64_t f : factors)
        if (pow_mod(g, (p - 1) / f, p) == 1) {
          ok = false;
          break;
        }
      if (ok) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
  }

  std::uint32_t p_, q_ = 0, t_ = 0;
  std::vector<std::uint32_t> t_pow_;
  std::vector<int> dlog_;
};

inline GpGroup make_group(std::uint32_t p) { return GpGroup(p); }

}  // namespace wordeq
