#pragma once

#include <wordeq/rational.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordeq {

// Word over {a,b}, packed as bits (a=0, b=1) with explicit length; the
// leftmost letter sits in the most significant of the len bits, so numeric
// order on (len, bits) is length-then-lexicographic order.
struct NCWord {
  std::uint8_t len = 0;
  std::uint64_t bits = 0;

  static NCWord empty() { return {}; }
  static NCWord letter_a() { return {1, 0}; }
  static NCWord letter_b() { return {1, 1}; }

  NCWord concat(const NCWord& o) const {
    if (len + o.len > 62) throw std::invalid_argument("NCWord: word too long");
    return {static_cast<std::uint8_t>(len + o.len), (bits << o.len) | o.bits};
  }

  int letter(int pos) const { return static_cast<int>((bits >> (len - 1 - pos)) & 1ULL); }

  std::string str() const {
    std::string s;
    for (int i = 0; i < len; ++i) s += letter(i) ? 'b' : 'a';
    return s;
  }

  static NCWord parse(const std::string& s) {
    NCWord w;
    for (char c : s) {
      if (c == 'a')
        w = w.concat(letter_a());
      else if (c == 'b')
        w = w.concat(letter_b());
      else
        throw std::invalid_argument("NCWord::parse: expected letters a/b");
    }
    return w;
  }

  auto operator<=>(const NCWord&) const = default;
};

// Noncommutative power series over Q in letters {a,b}, truncated at a fixed
// total degree. Arithmetic discards every term beyond the truncation degree.
class NCSeries {
 public:
  explicit NCSeries(int trunc, Rat constant = Rat(0)) : trunc_(trunc) {
    if (trunc < 0 || trunc > 16) throw std::invalid_argument("NCSeries: truncation degree out of range");
    set_coeff(NCWord::empty(), std::move(constant));
  }

  static NCSeries one(int trunc) { return NCSeries(trunc, Rat(1)); }
  // 1 + a or 1 + b
  static NCSeries one_plus_letter(int trunc, bool letter_b) {
    NCSeries s(trunc, Rat(1));
    if (trunc >= 1) s.set_coeff(letter_b ? NCWord::letter_b() : NCWord::letter_a(), Rat(1));
    return s;
  }

  int trunc() const { return trunc_; }
  const std::map<NCWord, Rat>& terms() const { return terms_; }

  Rat coeff(const NCWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  Rat constant_term() const { return coeff(NCWord::empty()); }

  void set_coeff(const NCWord& w, Rat v) {
    if (w.len > trunc_) return;
    if (v == 0)
      terms_.erase(w);
    else
      terms_[w] = std::move(v);
  }

  bool operator==(const NCSeries& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

  NCSeries operator+(const NCSeries& o) const {
    require_same_trunc(o);
    NCSeries r = *this;
    for (const auto& [w, c] : o.terms_) r.set_coeff(w, r.coeff(w) + c);
    return r;
  }
  NCSeries operator-(const NCSeries& o) const {
    require_same_trunc(o);
    NCSeries r = *this;
    for (const auto& [w, c] : o.terms_) r.set_coeff(w, r.coeff(w) - c);
    return r;
  }
  NCSeries operator*(const NCSeries& o) const {
    require_same_trunc(o);
    NCSeries r(trunc_);
    for (const auto& [w1, c1] : terms_) {
      for (const auto& [w2, c2] : o.terms_) {
        if (w1.len + w2.len > trunc_) continue;
        const NCWord w = w1.concat(w2);
        r.set_coeff(w, r.coeff(w) + c1 * c2);
      }
    }
    return r;
  }
  NCSeries scaled(const Rat& s) const {
    NCSeries r(trunc_);
    if (s == 0) return r;
    for (const auto& [w, c] : terms_) r.set_coeff(w, c * s);
    return r;
  }

  NCSeries retruncated(int trunc) const {
    NCSeries r(trunc);
    for (const auto& [w, c] : terms_)
      if (w.len <= trunc) r.set_coeff(w, c);
    return r;
  }

 private:
  void require_same_trunc(const NCSeries& o) const {
    if (trunc_ != o.trunc_) throw std::invalid_argument("NCSeries: truncation degree mismatch");
  }

  int trunc_;
  std::map<NCWord, Rat> terms_;
};

// (1+u)^r by the binomial series; exact at the truncation degree since u has
// zero constant term. Requires constant term 1.
inline NCSeries series_rational_power(const NCSeries& f, const Rat& r) {
  if (f.constant_term() != 1) throw std::invalid_argument("series_rational_power: constant term must be 1");
  const int d = f.trunc();
  NCSeries u = f;
  u.set_coeff(NCWord::empty(), Rat(0));
  NCSeries acc = NCSeries::one(d);
  NCSeries upow = NCSeries::one(d);
  Rat coef = 1;
  for (int k = 1; k <= d; ++k) {
    upow = upow * u;
    coef *= (r - (k - 1)) / k;
    acc = acc + upow.scaled(coef);
  }
  return acc;
}

inline NCSeries series_inverse(const NCSeries& f) { return series_rational_power(f, Rat(-1)); }

// Unique truncated X with prod_i (A_i X) = B, solved degree by degree: with
// all coefficients below degree D known, the degree-D coefficient of the
// partial product equals the defect polynomial, and each x_w is the defect
// divided by the factor count.
inline NCSeries series_solve_product(const std::vector<NCSeries>& a_list, const NCSeries& b, int degree) {
  if (a_list.empty()) throw std::invalid_argument("series_solve_product: factor list must be nonempty");
  if (b.constant_term() != 1) throw std::invalid_argument("series_solve_product: B must have constant term 1");
  std::vector<NCSeries> as;
  as.reserve(a_list.size());
  for (const auto& a : a_list) {
    if (a.constant_term() != 1) throw std::invalid_argument("series_solve_product: A_i must have constant term 1");
    as.push_back(a.retruncated(degree));
  }
  const NCSeries bt = b.retruncated(degree);
  const Rat m(static_cast<long long>(a_list.size()));

  NCSeries x = NCSeries::one(degree);
  for (int d = 1; d <= degree; ++d) {
    NCSeries prod = NCSeries::one(degree);
    for (const auto& a : as) prod = prod * (a * x);
    for (std::uint64_t bits = 0; bits < (1ULL << d); ++bits) {
      const NCWord w{static_cast<std::uint8_t>(d), bits};
      const Rat defect = bt.coeff(w) - prod.coeff(w);
      if (defect != 0) x.set_coeff(w, defect / m);
    }
  }
  return x;
}

}  // namespace wordeq
