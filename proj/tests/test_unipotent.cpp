#include <wordeq/unipotent.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wordeq;

namespace {

UnipotentMatrix random_ut(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  UnipotentMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) m.set(i, j, Rat(num(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  UnipotentMatrix m(3);
  m.set(0, 1, 2);
  m.set(0, 2, 1);
  m.set(1, 2, 2);
  CHECK(m * m.inverse() == UnipotentMatrix::identity(3));
  CHECK(m.inverse() * m == UnipotentMatrix::identity(3));
  CHECK(m.pow_int(0) == UnipotentMatrix::identity(3));
  CHECK(m.pow_int(3) == m * m * m);
  CHECK(m.pow_int(-2) == (m * m).inverse());
  CHECK_THROWS_AS(m.set(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.set(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(UnipotentMatrix(0), std::invalid_argument);
}

TEST_CASE("rational power fixture") {
  UnipotentMatrix m(3);  // I + N with N = [[0,2,1],[0,0,2],[0,0,0]]
  m.set(0, 1, 2);
  m.set(0, 2, 1);
  m.set(1, 2, 2);
  UnipotentMatrix root(3);
  root.set(0, 1, 1);
  root.set(1, 2, 1);
  CHECK(ut_rational_power(m, Rat(1, 2)) == root);
  CHECK(root * root == m);
  CHECK(ut_rational_power(m, Rat(1)) == m);
  CHECK(ut_rational_power(m, Rat(0)) == UnipotentMatrix::identity(3));
  CHECK(ut_rational_power(m, Rat(-1)) == m.inverse());
  CHECK(ut_rational_power(m, Rat(2)) == m * m);
}

TEST_CASE("rational power laws") {
  std::mt19937_64 rng(53);
  for (int dim = 2; dim <= 5; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      const UnipotentMatrix g = random_ut(rng, dim);
      CHECK(ut_rational_power(ut_rational_power(g, Rat(1, 2)), Rat(1, 3)) == ut_rational_power(g, Rat(1, 6)));
      CHECK(ut_rational_power(ut_rational_power(g, Rat(1, 3)), Rat(1, 2)) == ut_rational_power(g, Rat(1, 6)));
      CHECK(ut_rational_power(g, Rat(2, 3)) * ut_rational_power(g, Rat(1, 3)) == g);
      const UnipotentMatrix half = ut_rational_power(g, Rat(1, 2));
      CHECK(half * half == g);
    }
  }
}

TEST_CASE("product solver fixtures") {
  std::mt19937_64 rng(59);
  const UnipotentMatrix b = random_ut(rng, 4);
  CHECK(ut_solve_product({UnipotentMatrix::identity(4)}, b) == b);
  CHECK(ut_solve_product({UnipotentMatrix::identity(4), UnipotentMatrix::identity(4)}, b) ==
        ut_rational_power(b, Rat(1, 2)));
  UnipotentMatrix b1(1);
  CHECK(ut_solve_product({UnipotentMatrix::identity(1)}, b1) == UnipotentMatrix::identity(1));
  CHECK_THROWS_AS(ut_solve_product({}, b), std::invalid_argument);
  CHECK_THROWS_AS(ut_solve_product({UnipotentMatrix::identity(3)}, b), std::invalid_argument);
}

TEST_CASE("product solver satisfies the equation exactly") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> mm(1, 3);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 25; ++trial) {
      const int m = mm(rng);
      std::vector<UnipotentMatrix> as;
      for (int i = 0; i < m; ++i) as.push_back(random_ut(rng, dim));
      const UnipotentMatrix b = random_ut(rng, dim);
      const UnipotentMatrix x = ut_solve_product(as, b);
      UnipotentMatrix prod = UnipotentMatrix::identity(dim);
      for (const auto& a : as) prod = prod * (a * x);
      CHECK(prod == b);
    }
  }
}

TEST_CASE("solver agrees with rational powers for repeated identity factors") {
  std::mt19937_64 rng(67);
  for (int dim = 2; dim <= 5; ++dim) {
    const UnipotentMatrix b = random_ut(rng, dim);
    for (int m = 1; m <= 5; ++m) {
      const std::vector<UnipotentMatrix> as(static_cast<std::size_t>(m), UnipotentMatrix::identity(dim));
      CHECK(ut_solve_product(as, b) == ut_rational_power(b, Rat(1, m)));
    }
  }
}

TEST_CASE("perturbing any solved entry breaks the equation") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> mm(1, 3);
  for (int dim = 2; dim <= 4; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const int m = mm(rng);
      std::vector<UnipotentMatrix> as;
      for (int i = 0; i < m; ++i) as.push_back(random_ut(rng, dim));
      const UnipotentMatrix b = random_ut(rng, dim);
      const UnipotentMatrix x = ut_solve_product(as, b);
      for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
          UnipotentMatrix xp = x;
          xp.set(i, j, x.at(i, j) + Rat(1, 7));
          UnipotentMatrix prod = UnipotentMatrix::identity(dim);
          for (const auto& a : as) prod = prod * (a * xp);
          CHECK_FALSE(prod == b);
        }
      }
    }
  }
}

TEST_CASE("Riccati closed forms agree with the solver") {
  std::mt19937_64 rng(73);
  for (int dim = 3; dim <= 5; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const UnipotentMatrix a = random_ut(rng, dim);
      const UnipotentMatrix b = random_ut(rng, dim);
      const UnipotentMatrix ah = ut_rational_power(a, Rat(1, 2));
      const UnipotentMatrix ahi = ut_rational_power(a, Rat(-1, 2));
      const UnipotentMatrix bh = ut_rational_power(b, Rat(1, 2));
      const UnipotentMatrix bhi = ut_rational_power(b, Rat(-1, 2));
      const UnipotentMatrix x1 = ahi * ut_rational_power(ah * b * ah, Rat(1, 2)) * ahi;
      const UnipotentMatrix x2 = bh * ut_rational_power(bhi * a.inverse() * bhi, Rat(1, 2)) * bh;
      CHECK(x1 == x2);
      const UnipotentMatrix x = ut_solve_product({UnipotentMatrix::identity(dim), a}, b);
      CHECK(x == x1);
      CHECK(x * a * x == b);
    }
  }
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(79);
  const UnipotentMatrix m = random_ut(rng, 4);
  CHECK(UnipotentMatrix::deserialize(4, m.serialize_entries()) == m);
  CHECK_THROWS_AS(UnipotentMatrix::deserialize(2, {"1", "0", "1", "1"}), std::invalid_argument);
  CHECK_THROWS_AS(UnipotentMatrix::deserialize(2, {"1", "0", "0"}), std::invalid_argument);
}
