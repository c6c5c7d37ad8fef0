#include <wordeq/poly.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wordeq;

namespace {

BivarPoly poly_of(const std::string& text) { return word_polynomial(parse_word(text)); }

Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::string s;
  for (int i = 0, L = len(rng); i < L; ++i) s += (rng() & 1) ? 'A' : 'X';
  return from_letters(s);
}

}  // namespace

TEST_CASE("word polynomial fixtures") {
  BivarPoly p1;
  p1.add_term(0, 0, 1);
  p1.add_term(1, 0, 1);
  p1.add_term(2, 1, 1);
  CHECK(poly_of("X^2AX") == p1);
  CHECK(poly_of("X^2AX").to_string() == "1 + x + x^2*y");

  BivarPoly p2;
  p2.add_term(0, 0, 1);
  p2.add_term(1, 1, 1);
  p2.add_term(2, 2, 1);
  CHECK(poly_of("XAXAX") == p2);
  CHECK(poly_of("XAXAX").to_string() == "1 + x*y + x^2*y^2");

  // X^{n-1}AX -> 1 + x + ... + x^{n-2} + x^{n-1} y
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    exps[static_cast<std::size_t>(n - 1)] = 1;
    BivarPoly expect;
    for (int k = 0; k + 1 < n; ++k) expect.add_term(k, 0, 1);
    expect.add_term(n - 1, 1, 1);
    CHECK(word_polynomial(Word{exps}) == expect);
  }

  CHECK(poly_of("A^4").is_zero());
  CHECK(poly_of("").is_zero());
}

TEST_CASE("word polynomial recurrences") {
  std::mt19937_64 rng(31);
  const BivarPoly x = BivarPoly::monomial(1, 0, 1);
  const BivarPoly y = BivarPoly::monomial(0, 1, 1);
  const BivarPoly one = BivarPoly::constant(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 8);
    if (w.x_count() == 0) continue;
    const std::string s = to_letters(w);
    CHECK(word_polynomial(from_letters("X" + s)) == x * word_polynomial(w) + one);
    CHECK(word_polynomial(from_letters("A" + s)) == y * word_polynomial(w));
  }
}

TEST_CASE("substitute_squares doubles degrees") {
  BivarPoly q1;
  q1.add_term(0, 0, 1);
  q1.add_term(2, 0, 1);
  q1.add_term(4, 2, 1);
  CHECK(substitute_squares(poly_of("X^2AX")) == q1);
  CHECK(q1.to_string() == "1 + x^2 + x^4*y^2");

  BivarPoly q2;
  q2.add_term(0, 0, 1);
  q2.add_term(2, 2, 1);
  q2.add_term(4, 4, 1);
  CHECK(substitute_squares(poly_of("XAXAX")) == q2);

  CHECK(substitute_squares(BivarPoly::zero()).is_zero());
}

TEST_CASE("composition identity fixtures") {
  auto [lhs, rhs] = poly_compose_identity(parse_word("XX"), parse_word("XAX"));
  BivarPoly expect;
  expect.add_term(0, 0, 1);
  expect.add_term(1, 1, 1);
  expect.add_term(2, 1, 1);
  expect.add_term(3, 2, 1);
  CHECK(lhs == expect);
  CHECK(rhs == expect);

  auto [l2, r2] = poly_compose_identity(parse_word("X"), parse_word("XAXAX"));
  CHECK(l2 == poly_of("XAXAX"));
  CHECK(r2 == poly_of("XAXAX"));

  auto [l3, r3] = poly_compose_identity(parse_word("XAXAX"), parse_word("XAXAX"));
  CHECK(l3 == r3);
  CHECK(l3.max_x_degree() == 8);

  CHECK_THROWS_AS(poly_compose_identity(parse_word("XA"), parse_word("X")), std::invalid_argument);
  CHECK_THROWS_AS(poly_compose_identity(parse_word("X"), parse_word("XA")), std::invalid_argument);
}

TEST_CASE("composition identity over all short X-terminated pairs") {
  std::vector<Word> pool;
  for (const Word& w : enumerate_words(6, false))
    if (w.x_count() >= 1 && w.exponents.back() == 0) pool.push_back(w);
  CHECK(pool.size() == 63);
  for (const Word& u : pool)
    for (const Word& w : pool) {
      auto [lhs, rhs] = poly_compose_identity(u, w);
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("affine image fixtures") {
  CHECK(affine_image(parse_word("X"), 5, 7, 3) == std::make_pair(Int(5), Int(3)));
  CHECK(affine_image(parse_word("A"), 5, 7, 3) == std::make_pair(Int(7), Int(0)));
  CHECK(affine_image(parse_word("X^2AX"), 2, 3, 1) == std::make_pair(Int(24), Int(15)));
}

TEST_CASE("affine image agrees with the word polynomial") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = random_word(rng, 8);
    const Int x = val(rng), y = val(rng), z = val(rng);
    const auto [scale, shift] = affine_image(w, x, y, z);
    Int xs = 1, ym = 1;
    for (int i = 0; i < w.x_count(); ++i) xs *= x;
    for (long long i = 0; i < w.a_count(); ++i) ym *= y;
    CHECK(scale == xs * ym);
    CHECK(shift == word_polynomial(w).eval(x, y) * z);
  }
}

TEST_CASE("eval_mod basics") {
  BivarPoly p;
  p.add_term(0, 0, 1);
  p.add_term(2, 0, 1);
  p.add_term(4, 2, 1);
  CHECK(eval_mod(p, 1, 3, 11) == 0);
  CHECK(eval_mod(p, 0, 0, 11) == 1);

  BivarPoly q;
  q.add_term(0, 0, 1);
  q.add_term(2, 2, 1);
  q.add_term(4, 4, 1);
  CHECK(eval_mod(q, 1, 1, 7) == 3);
  CHECK(eval_mod(q, 1, 1, 13) == 3);

  BivarPoly neg;
  neg.add_term(0, 0, -1);
  CHECK(eval_mod(neg, 0, 0, 7) == 6);
}

TEST_CASE("word recovery from the polynomial") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, 9);
    if (w.x_count() == 0) continue;
    w.exponents.back() = 0;  // make it end with X
    CHECK(word_from_polynomial(word_polynomial(w)) == w);
  }
  CHECK_THROWS_AS(word_from_polynomial(BivarPoly::zero()), std::invalid_argument);
  BivarPoly bad;
  bad.add_term(0, 0, 2);
  CHECK_THROWS_AS(word_from_polynomial(bad), std::invalid_argument);
}

TEST_CASE("univariate polynomial arithmetic") {
  const UnivarPoly a({1, 2, 1});   // (1+x)^2
  const UnivarPoly b({1, 1});      // 1+x
  CHECK(b * b == a);
  CHECK(a - b == UnivarPoly({0, 1, 1}));
  CHECK(a.eval(3) == 16);
  CHECK(a.to_string("y") == "1 + 2*y + y^2");
  CHECK(UnivarPoly({-1, 0, 1}).to_string() == "-1 + x^2");
  CHECK(UnivarPoly().to_string() == "0");
  CHECK(UnivarPoly({0, 3}).derivative() == UnivarPoly({3}));
}
