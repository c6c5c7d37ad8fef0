#pragma once

#include <wordeq/poly.hpp>
#include <wordeq/rational.hpp>
#include <wordeq/word.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordeq {

namespace detail {

using RatUPoly = std::vector<Rat>;  // coefficient i of x^i

inline void rat_normalize(RatUPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatUPoly to_rat(const UnivarPoly& p) {
  RatUPoly r(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) r[i] = Rat(p.c[i]);
  return r;
}

// Remainder of a by b over the rationals; b must be nonzero.
inline RatUPoly rat_rem(RatUPoly a, const RatUPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    rat_normalize(a);
  }
  return a;
}

inline UnivarPoly primitive_integer(const RatUPoly& p) {
  if (p.empty()) return UnivarPoly();
  Int den_lcm = 1;
  for (const Rat& r : p) den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(r));
  std::vector<Int> v(p.size());
  Int content = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    v[i] = rat_num(p[i]) * (den_lcm / rat_den(p[i]));
    content = boost::multiprecision::gcd(content, v[i]);
  }
  if (content == 0) return UnivarPoly();
  if (v.back() < 0) content = -content;
  for (auto& x : v) x /= content;
  return UnivarPoly(std::move(v));
}

}  // namespace detail

// Monic-normalized gcd over Q, returned as a primitive integer polynomial
// with positive leading coefficient.
inline UnivarPoly poly_gcd(const UnivarPoly& a, const UnivarPoly& b) {
  detail::RatUPoly x = detail::to_rat(a), y = detail::to_rat(b);
  detail::rat_normalize(x);
  detail::rat_normalize(y);
  while (!y.empty()) {
    detail::RatUPoly r = detail::rat_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return detail::primitive_integer(x);
}

// Exact quotient a / b over Z; throws if the division is not exact.
inline UnivarPoly poly_exact_divide(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_exact_divide: division by zero");
  detail::RatUPoly x = detail::to_rat(a);
  const detail::RatUPoly y = detail::to_rat(b);
  detail::RatUPoly q(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, Rat(0));
  while (x.size() >= y.size() && !x.empty()) {
    const Rat f = x.back() / y.back();
    const std::size_t shift = x.size() - y.size();
    q[shift] = f;
    for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= f * y[i];
    detail::rat_normalize(x);
  }
  if (!x.empty()) throw std::invalid_argument("poly_exact_divide: remainder is nonzero");
  std::vector<Int> v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (rat_den(q[i]) != 1) throw std::invalid_argument("poly_exact_divide: quotient not integral");
    v[i] = rat_num(q[i]);
  }
  return UnivarPoly(std::move(v));
}

inline UnivarPoly squarefree_part(const UnivarPoly& f) {
  if (f.is_zero()) return f;
  const UnivarPoly g = poly_gcd(f, f.derivative());
  if (g.degree() <= 0) return f;
  return poly_exact_divide(f, g);
}

// True iff f = g^2 for some g in Z[x]. The top half of g is produced by
// coefficient recursion; the candidate is then verified by exact squaring.
inline bool is_perfect_square(const UnivarPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_perfect_square: zero polynomial");
  const int d = f.degree();
  if (d % 2 != 0) return false;
  const Int lc = f.c.back();
  if (lc < 0 || !is_square_int(lc)) return false;
  if (d == 0) return true;
  const int h = d / 2;
  std::vector<Int> g(static_cast<std::size_t>(h) + 1, Int(0));
  g[static_cast<std::size_t>(h)] = boost::multiprecision::sqrt(lc);
  const Int twice_lead = 2 * g[static_cast<std::size_t>(h)];
  for (int idx = 1; idx <= h; ++idx) {
    Int cross = 0;
    for (int j = 1; j < idx; ++j) cross += g[static_cast<std::size_t>(h - j)] * g[static_cast<std::size_t>(h - idx + j)];
    const Int num = f.coeff(d - idx) - cross;
    if (num % twice_lead != 0) return false;
    g[static_cast<std::size_t>(h - idx)] = num / twice_lead;
  }
  const UnivarPoly cand(std::move(g));
  return cand * cand == f;
}

// True iff the exact product of factors equals P.
inline bool verify_factorization(const BivarPoly& p, const std::vector<BivarPoly>& factors) {
  BivarPoly prod = BivarPoly::constant(1);
  for (const auto& f : factors) prod = prod * f;
  return prod == p;
}

enum class CertFamily { XnAXm, ThreeApart, XAXnAX, X2AXnX };

inline std::string to_string(CertFamily f) {
  switch (f) {
    case CertFamily::XnAXm: return "XnAXm";
    case CertFamily::ThreeApart: return "ThreeApart";
    case CertFamily::XAXnAX: return "XAXnAX";
    default: return "X2AXnX";
  }
}

struct CertificateReport {
  CertFamily family = CertFamily::XnAXm;
  std::vector<long long> params;
  enum class Verdict { CertifiedNotRadical, Inapplicable } verdict = Verdict::Inapplicable;
  std::vector<std::pair<std::string, std::string>> evidence;  // named exact artifacts
  std::string summary;

  bool certified() const { return verdict == Verdict::CertifiedNotRadical; }
};

inline std::string to_string(CertificateReport::Verdict v) {
  return v == CertificateReport::Verdict::CertifiedNotRadical ? "certified-not-radical" : "inapplicable";
}

// The word each certified family denotes.
inline Word family_word(CertFamily family, const std::vector<long long>& params) {
  switch (family) {
    case CertFamily::XnAXm: {
      const long long m = params.at(0), n = params.at(1);  // X^n A X^m
      std::vector<int> e(static_cast<std::size_t>(m + n) + 1, 0);
      e[static_cast<std::size_t>(n)] = 1;
      return Word(std::move(e));
    }
    case CertFamily::ThreeApart: {
      const long long m = params.at(0), n = params.at(1);
      return Word({0, static_cast<int>(m + 2 * n), static_cast<int>(m + n), static_cast<int>(m), 0});
    }
    case CertFamily::XAXnAX: {
      const long long n = params.at(0);
      std::vector<int> e(static_cast<std::size_t>(n) + 3, 0);
      e[1] = 1;
      e[static_cast<std::size_t>(n) + 1] = 1;
      return Word(std::move(e));
    }
    default: {  // X^2 (AX)^n X
      const long long n = params.at(0);
      std::vector<int> e(static_cast<std::size_t>(n) + 4, 0);
      for (long long i = 2; i < n + 2; ++i) e[static_cast<std::size_t>(i)] = 1;
      return Word(std::move(e));
    }
  }
}

// X^n A X^m with m != n: the root sets of x^{2m}-1 and x^{2n}-1 differ, which
// is checked by their gcd having degree below max(2m, 2n).
inline CertificateReport certify_XnAXm(long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("certify_XnAXm: m, n >= 1 required");
  CertificateReport rep;
  rep.family = CertFamily::XnAXm;
  rep.params = {m, n};
  if (m == n) {
    rep.verdict = CertificateReport::Verdict::Inapplicable;
    rep.summary = "m = n: X^nAX^n is totally decomposable";
    return rep;
  }
  const UnivarPoly fm = UnivarPoly::monomial(static_cast<int>(2 * m), Int(1)) - UnivarPoly::constant(Int(1));
  const UnivarPoly fn = UnivarPoly::monomial(static_cast<int>(2 * n), Int(1)) - UnivarPoly::constant(Int(1));
  const UnivarPoly g = poly_gcd(fm, fn);
  const long long maxdeg = 2 * std::max(m, n);
  if (g.degree() >= maxdeg) throw std::logic_error("certify_XnAXm: gcd degree check failed");
  rep.verdict = CertificateReport::Verdict::CertifiedNotRadical;
  rep.evidence.emplace_back("gcd(x^2m-1, x^2n-1)", g.to_string("x"));
  rep.evidence.emplace_back("gcd_degree", std::to_string(g.degree()));
  rep.evidence.emplace_back("max_degree", std::to_string(maxdeg));
  rep.summary = "gcd degree " + std::to_string(g.degree()) + " < " + std::to_string(maxdeg) +
                ": some 2max(m,n)-th root of unity separates the factors";
  return rep;
}

// w = X A^{m+2n} X A^{m+n} X A^m X. Verifies the closed-form factorization of
// P_w, builds the discriminant D(y) of the quadratic-in-x^2 factor after the
// square substitution, matches it against y^{4m+4n}(y^{2n}-3)(y^{2n}+1), and
// certifies by D failing the exact square test.
inline CertificateReport certify_three_apart(long long m, long long n) {
  if (m < 0 || n < 1) throw std::invalid_argument("certify_three_apart: m >= 0, n >= 1 required");
  CertificateReport rep;
  rep.family = CertFamily::ThreeApart;
  rep.params = {m, n};
  const Word w = family_word(CertFamily::ThreeApart, {m, n});
  const BivarPoly pw = word_polynomial(w);

  BivarPoly f1;
  f1.add_term(0, 0, Int(1));
  f1.add_term(1, static_cast<int>(m + n), Int(1));
  BivarPoly f2;
  f2.add_term(0, 0, Int(1));
  f2.add_term(1, static_cast<int>(m + 2 * n), Int(1));
  f2.add_term(1, static_cast<int>(m + n), Int(-1));
  f2.add_term(2, static_cast<int>(2 * m + 2 * n), Int(1));
  if (!verify_factorization(pw, {f1, f2})) throw std::logic_error("certify_three_apart: factorization identity failed");

  const BivarPoly h = substitute_squares(f2);
  const UnivarPoly f = h.coeff_in_x(2);
  const UnivarPoly g = h.coeff_in_x(4);
  if (h.coeff_in_x(0) != UnivarPoly::constant(Int(1)) || h.max_x_degree() != 4)
    throw std::logic_error("certify_three_apart: unexpected shape of the substituted factor");
  const UnivarPoly d = f * f - g * Int(4);

  UnivarPoly expected = UnivarPoly::monomial(static_cast<int>(4 * n), Int(1)) -
                        UnivarPoly::monomial(static_cast<int>(2 * n), Int(2)) - UnivarPoly::constant(Int(3));
  expected = expected * UnivarPoly::monomial(static_cast<int>(4 * m + 4 * n), Int(1));
  if (d != expected) throw std::logic_error("certify_three_apart: discriminant identity failed");
  if (is_perfect_square(d)) throw std::logic_error("certify_three_apart: discriminant unexpectedly a square");

  rep.verdict = CertificateReport::Verdict::CertifiedNotRadical;
  rep.evidence.emplace_back("word", render(w));
  rep.evidence.emplace_back("P_w", pw.to_string());
  rep.evidence.emplace_back("factor_1", f1.to_string());
  rep.evidence.emplace_back("factor_2", f2.to_string());
  rep.evidence.emplace_back("D", d.to_string("y"));
  rep.evidence.emplace_back("D_squarefree_part", squarefree_part(d).to_string("y"));
  rep.summary = "P_w factors as stated; D(y) = y^{4m+4n}(y^{2n}-3)(y^{2n}+1) is not a square in Z[y]";
  return rep;
}

// w = X A X^n A X, n >= 3. D(x) = (1 + x^2 + ... + x^{2n-2})^2 - 4x^{2n-2};
// D(1) = n^2 - 4 is not an integer square, and the full polynomial square
// test on D serves as a cross-check.
inline CertificateReport certify_XAXnAX(long long n) {
  if (n < 1) throw std::invalid_argument("certify_XAXnAX: n >= 1 required");
  CertificateReport rep;
  rep.family = CertFamily::XAXnAX;
  rep.params = {n};
  if (n < 3) {
    rep.verdict = CertificateReport::Verdict::Inapplicable;
    rep.summary = "requires n >= 3 (n=1 is decomposable; n=2 is handled by scanning)";
    return rep;
  }
  std::vector<Int> s(static_cast<std::size_t>(2 * n - 1), Int(0));
  for (long long i = 0; i <= 2 * n - 2; i += 2) s[static_cast<std::size_t>(i)] = 1;
  const UnivarPoly sum(std::move(s));
  const UnivarPoly d = sum * sum - UnivarPoly::monomial(static_cast<int>(2 * n - 2), Int(4));
  const Int d1 = d.eval(Int(1));
  if (d1 != Int(n) * Int(n) - 4) throw std::logic_error("certify_XAXnAX: D(1) != n^2 - 4");
  if (is_square_int(d1)) throw std::logic_error("certify_XAXnAX: D(1) unexpectedly a square");
  if (is_perfect_square(d)) throw std::logic_error("certify_XAXnAX: D unexpectedly a polynomial square");
  rep.verdict = CertificateReport::Verdict::CertifiedNotRadical;
  rep.evidence.emplace_back("word", render(family_word(CertFamily::XAXnAX, {n})));
  rep.evidence.emplace_back("D", d.to_string("x"));
  rep.evidence.emplace_back("D(1)", d1.str());
  rep.summary = "D(1) = " + d1.str() + " = n^2 - 4 is not a square; polynomial square test agrees";
  return rep;
}

// w = X^2 (AX)^n X, n >= 2, certified by the substitution Y = A^{1/2} X A^{1/2},
// which carries the equation to the X A X^{n+1} A X instance.
inline CertificateReport certify_X2AXnX(long long n) {
  if (n < 1) throw std::invalid_argument("certify_X2AXnX: n >= 1 required");
  CertificateReport rep;
  rep.family = CertFamily::X2AXnX;
  rep.params = {n};
  if (n < 2) {
    rep.verdict = CertificateReport::Verdict::Inapplicable;
    rep.summary = "requires n >= 2";
    return rep;
  }
  const CertificateReport inner = certify_XAXnAX(n + 1);
  rep.verdict = inner.verdict;
  rep.evidence.emplace_back("word", render(family_word(CertFamily::X2AXnX, {n})));
  rep.evidence.emplace_back("reduction",
                            "Y = A^(1/2)XA^(1/2), C = A^(-1), D = A^(1/2)BA^(1/2) maps the equation to "
                            "YCY^" + std::to_string(n + 1) + "CY = D, i.e. the XAX^" + std::to_string(n + 1) +
                            "AX certificate");
  for (const auto& e : inner.evidence) rep.evidence.emplace_back("inner." + e.first, e.second);
  rep.summary = "reduces to XAX^" + std::to_string(n + 1) + "AX: " + inner.summary;
  return rep;
}

struct FamilyMatch {
  CertFamily family = CertFamily::XnAXm;
  std::vector<long long> params;  // parameters of the (possibly reduced) family instance
  long long scale = 1;            // common factor divided out of every A-run
};

// The word a match denotes: the family word with every A-run scaled back up.
inline Word match_word(const FamilyMatch& match) {
  Word w = family_word(match.family, match.params);
  for (auto& a : w.exponents) a = static_cast<int>(a * match.scale);
  return w;
}

namespace detail {

inline std::vector<FamilyMatch> match_families_literal(const Word& w) {
  std::vector<FamilyMatch> out;
  const auto& e = w.exponents;
  const int n = w.x_count();
  if (n < 2 || e.front() != 0 || e.back() != 0) return out;

  // X^a A X^b: exactly one inner exponent, equal to 1
  {
    int ones = 0, pos = -1;
    bool rest_zero = true;
    for (int i = 1; i < n; ++i) {
      if (e[static_cast<std::size_t>(i)] == 1) {
        ++ones;
        pos = i;
      } else if (e[static_cast<std::size_t>(i)] != 0) {
        rest_zero = false;
      }
    }
    if (rest_zero && ones == 1) out.push_back({CertFamily::XnAXm, {n - pos, pos}, 1});  // (m, n)
  }
  // X A^{m+2n} X A^{m+n} X A^m X
  if (n == 4) {
    const long long a1 = e[1], a2 = e[2], a3 = e[3];
    if (a1 - a2 == a2 - a3 && a2 - a3 >= 1) out.push_back({CertFamily::ThreeApart, {a3, a2 - a3}, 1});
  }
  // X A X^k A X
  if (n >= 3 && e[1] == 1 && e[static_cast<std::size_t>(n) - 1] == 1) {
    bool mid_zero = true;
    for (int i = 2; i < n - 1; ++i) mid_zero = mid_zero && e[static_cast<std::size_t>(i)] == 0;
    if (mid_zero) out.push_back({CertFamily::XAXnAX, {n - 2}, 1});
  }
  // X^2 (AX)^k X
  if (n >= 4 && e[1] == 0 && e[static_cast<std::size_t>(n) - 1] == 0) {
    bool mid_one = true;
    for (int i = 2; i < n - 1; ++i) mid_one = mid_one && e[static_cast<std::size_t>(i)] == 1;
    if (mid_one && n - 3 >= 1) out.push_back({CertFamily::X2AXnX, {n - 3}, 1});
  }
  return out;
}

}  // namespace detail

// Structural matches of w against the certified families. When every A-run
// exponent shares a factor g > 1, the word is w'(X, A^g) for the reduced word
// w'; since A = (A^g)^{1/g} in any uniquely divisible group, a certificate
// for w' carries over, so reduced matches are reported with their scale.
// Matching does not imply applicability; the certificate itself decides that.
inline std::vector<FamilyMatch> match_families(const Word& w) {
  std::vector<FamilyMatch> out = detail::match_families_literal(w);
  long long g = 0;
  for (int a : w.exponents) g = std::gcd(g, static_cast<long long>(a));
  if (g >= 2) {
    Word reduced = w;
    for (auto& a : reduced.exponents) a = static_cast<int>(a / g);
    for (FamilyMatch m : detail::match_families_literal(reduced)) {
      m.scale = g;
      out.push_back(std::move(m));
    }
  }
  return out;
}

inline CertificateReport run_certificate(const FamilyMatch& match) {
  CertificateReport rep;
  switch (match.family) {
    case CertFamily::XnAXm: rep = certify_XnAXm(match.params.at(0), match.params.at(1)); break;
    case CertFamily::ThreeApart: rep = certify_three_apart(match.params.at(0), match.params.at(1)); break;
    case CertFamily::XAXnAX: rep = certify_XAXnAX(match.params.at(0)); break;
    default: rep = certify_X2AXnX(match.params.at(0)); break;
  }
  if (match.scale > 1 && rep.certified()) {
    rep.evidence.emplace_back("exponent_reduction",
                              "word is w'(X, C) for C = A^" + std::to_string(match.scale) + " with w' = " +
                                  render(family_word(match.family, match.params)) +
                                  "; A = C^(1/" + std::to_string(match.scale) +
                                  ") carries any radical solution back to the reduced instance");
    rep.summary = "after dividing A-run exponents by " + std::to_string(match.scale) + ": " + rep.summary;
  }
  return rep;
}

}  // namespace wordeq
