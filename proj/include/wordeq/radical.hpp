#pragma once

#include <wordeq/backends.hpp>
#include <wordeq/rational.hpp>
#include <wordeq/word.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordeq {

// Formal radical expression over the letters {A,B}: products and rational
// powers, with flattened product lists. Expressions are never simplified or
// tested for formal equivalence; they are compared only by evaluation.
class RadicalExpr {
 public:
  enum class Kind { LetterA, LetterB, Product, Power };

  static RadicalExpr letter_a() { return RadicalExpr(Kind::LetterA); }
  static RadicalExpr letter_b() { return RadicalExpr(Kind::LetterB); }

  static RadicalExpr product(std::vector<RadicalExpr> children) {
    RadicalExpr e(Kind::Product);
    for (auto& c : children) {
      if (c.kind_ == Kind::Product)
        for (auto& gc : c.children_) e.children_.push_back(std::move(gc));
      else
        e.children_.push_back(std::move(c));
    }
    return e;
  }

  static RadicalExpr power(RadicalExpr base, Rat exponent) {
    RadicalExpr e(Kind::Power);
    e.exponent_ = std::move(exponent);
    e.children_.push_back(std::move(base));
    return e;
  }

  Kind kind() const { return kind_; }
  const Rat& exponent() const { return exponent_; }
  const std::vector<RadicalExpr>& children() const { return children_; }

  bool operator==(const RadicalExpr& o) const {
    return kind_ == o.kind_ && exponent_ == o.exponent_ && children_ == o.children_;
  }

  // Paper-style rendering: juxtaposed products, caret exponents, parentheses
  // around composite bases and around any non-plain-integer exponent.
  std::string str() const {
    switch (kind_) {
      case Kind::LetterA: return "A";
      case Kind::LetterB: return "B";
      case Kind::Product: {
        std::string out;
        for (const auto& c : children_) out += c.kind_ == Kind::Product ? "(" + c.str() + ")" : c.str();
        return out;
      }
      case Kind::Power: {
        const RadicalExpr& base = children_[0];
        std::string b = base.kind_ == Kind::LetterA || base.kind_ == Kind::LetterB ? base.str() : "(" + base.str() + ")";
        const Int num = rat_num(exponent_), den = rat_den(exponent_);
        std::string e;
        if (den == 1 && num >= 0)
          e = num.str();
        else if (den == 1)
          e = "(" + num.str() + ")";
        else
          e = "(" + num.str() + "/" + den.str() + ")";
        return b + "^" + e;
      }
    }
    return {};
  }

  static RadicalExpr parse(std::string_view text);

 private:
  explicit RadicalExpr(Kind k) : kind_(k) {}

  Kind kind_;
  Rat exponent_ = 0;
  std::vector<RadicalExpr> children_;
};

namespace detail {

struct ExprParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("radical expression parse error: " + msg + " (at position " + std::to_string(pos) + ")");
  }

  Int parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
      neg = true;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected integer");
    Int v(std::string(s.substr(start, pos - start)));
    return neg ? -v : v;
  }

  Rat parse_exponent() {
    skip_ws();
    if (peek() == '(') {
      ++pos;
      const Int num = parse_int();
      Int den = 1;
      if (peek() == '/') {
        ++pos;
        den = parse_int();
        if (den <= 0) fail("exponent denominator must be positive");
      }
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return Rat(num, den);
    }
    return Rat(parse_int());
  }

  RadicalExpr parse_factor() {
    RadicalExpr base = [&] {
      const char c = peek();
      if (c == 'A') {
        ++pos;
        return RadicalExpr::letter_a();
      }
      if (c == 'B') {
        ++pos;
        return RadicalExpr::letter_b();
      }
      if (c == '(') {
        ++pos;
        RadicalExpr inner = parse_product();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      fail("expected 'A', 'B' or '('");
    }();
    if (peek() == '^') {
      ++pos;
      return RadicalExpr::power(std::move(base), parse_exponent());
    }
    return base;
  }

  RadicalExpr parse_product() {
    std::vector<RadicalExpr> factors;
    factors.push_back(parse_factor());
    while (!done() && peek() != ')') factors.push_back(parse_factor());
    if (factors.size() == 1) return std::move(factors[0]);
    return RadicalExpr::product(std::move(factors));
  }
};

}  // namespace detail

inline RadicalExpr RadicalExpr::parse(std::string_view text) {
  detail::ExprParser p{text};
  RadicalExpr e = p.parse_product();
  if (!p.done()) p.fail("trailing input");
  return e;
}

// Closed-form solution of w(X,A)=B for a totally decomposable w, built from
// the witness outermost-first starting at y = B:
//   Pi(m,k): y -> a^{-k/2} (a^{k/2} y a^{k/2})^{1/(m+1)} a^{-k/2}
//   L:       y -> A^{-1} y
//   R:       y -> y A^{-1}
inline RadicalExpr solve_decomposable(const DecompositionWitness& witness) {
  RadicalExpr e = RadicalExpr::letter_b();
  for (auto it = witness.morphisms.rbegin(); it != witness.morphisms.rend(); ++it) {
    switch (it->kind) {
      case Morphism::Kind::L:
        e = RadicalExpr::product({RadicalExpr::power(RadicalExpr::letter_a(), Rat(-1)), std::move(e)});
        break;
      case Morphism::Kind::R:
        e = RadicalExpr::product({std::move(e), RadicalExpr::power(RadicalExpr::letter_a(), Rat(-1))});
        break;
      case Morphism::Kind::Pi: {
        const Rat root(1, it->m + 1);
        if (it->k == 0) {
          e = RadicalExpr::power(std::move(e), root);
        } else {
          const Rat half(it->k, 2);
          RadicalExpr inner = RadicalExpr::product({RadicalExpr::power(RadicalExpr::letter_a(), half), std::move(e),
                                                    RadicalExpr::power(RadicalExpr::letter_a(), half)});
          e = RadicalExpr::product({RadicalExpr::power(RadicalExpr::letter_a(), -half),
                                    RadicalExpr::power(std::move(inner), root),
                                    RadicalExpr::power(RadicalExpr::letter_a(), -half)});
        }
        break;
      }
    }
  }
  return e;
}

template <GroupBackend B>
typename B::Element evaluate(const RadicalExpr& e, const B& backend, const typename B::Element& a,
                             const typename B::Element& b) {
  switch (e.kind()) {
    case RadicalExpr::Kind::LetterA: return a;
    case RadicalExpr::Kind::LetterB: return b;
    case RadicalExpr::Kind::Product: {
      typename B::Element acc = backend.identity();
      for (const auto& c : e.children()) acc = backend.mul(acc, evaluate(c, backend, a, b));
      return acc;
    }
    case RadicalExpr::Kind::Power:
      return backend.rational_power(evaluate(e.children()[0], backend, a, b), e.exponent());
  }
  throw std::logic_error("evaluate: unreachable");
}

// Checks w(E(A,B), A) = B on random backend instances; exact in the rational
// backends, within tolerance in the real backend.
template <GroupBackend B>
bool verify_solution(const Word& w, const RadicalExpr& e, const B& backend, int trials,
                     std::uint64_t seed = 0x5eed5eedULL) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const typename B::Element a = backend.random_element(rng);
    const typename B::Element b = backend.random_element(rng);
    const typename B::Element x = evaluate(e, backend, a, b);
    if (!backend.equal(eval_word_in(backend, w, x, a), b)) return false;
  }
  return true;
}

}  // namespace wordeq
