#pragma once

#include <wordeq/rational.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordeq {

// Upper unitriangular matrix with exact rational entries. The unit diagonal
// and zero lower triangle are maintained by construction.
class UnipotentMatrix {
 public:
  explicit UnipotentMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rat(0)) {
    if (n < 1) throw std::invalid_argument("UnipotentMatrix: dimension >= 1 required");
    for (int i = 0; i < n; ++i) raw(i, i) = 1;
  }

  static UnipotentMatrix identity(int n) { return UnipotentMatrix(n); }

  int dim() const { return n_; }

  const Rat& at(int i, int j) const {
    check_index(i, j);
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  void set(int i, int j, Rat v) {
    check_index(i, j);
    if (i > j) throw std::invalid_argument("UnipotentMatrix::set: below the diagonal");
    if (i == j) {
      if (v != 1) throw std::invalid_argument("UnipotentMatrix::set: diagonal must stay 1");
      return;
    }
    a_[static_cast<std::size_t>(i) * n_ + j] = std::move(v);
  }

  bool operator==(const UnipotentMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  UnipotentMatrix operator*(const UnipotentMatrix& o) const {
    require_same_dim(o);
    UnipotentMatrix r(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) {
        Rat acc = 0;
        for (int k = i; k <= j; ++k) acc += at(i, k) * o.at(k, j);
        r.raw(i, j) = std::move(acc);
      }
    }
    return r;
  }

  // (I + N)^{-1} = sum_k (-N)^k; defined after ut_rational_power below.
  UnipotentMatrix inverse() const;

  UnipotentMatrix pow_int(long long e) const {
    if (e < 0) return inverse().pow_int(-e);
    UnipotentMatrix acc = identity(n_);
    UnipotentMatrix base = *this;
    auto u = static_cast<unsigned long long>(e);
    while (u) {
      if (u & 1ULL) acc = acc * base;
      base = base * base;
      u >>= 1ULL;
    }
    return acc;
  }

  UnipotentMatrix leading_block(int d) const {
    UnipotentMatrix r(d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) r.raw(i, j) = at(i, j);
    return r;
  }

  std::vector<Rat> last_column_top() const {
    std::vector<Rat> v(static_cast<std::size_t>(n_) - 1);
    for (int i = 0; i + 1 < n_; ++i) v[static_cast<std::size_t>(i)] = at(i, n_ - 1);
    return v;
  }

  static UnipotentMatrix assemble(const UnipotentMatrix& block, const std::vector<Rat>& last_col) {
    const int n = block.dim() + 1;
    if (static_cast<int>(last_col.size()) != n - 1)
      throw std::invalid_argument("UnipotentMatrix::assemble: column size mismatch");
    UnipotentMatrix r(n);
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j + 1 < n; ++j) r.raw(i, j) = block.at(i, j);
    for (int i = 0; i + 1 < n; ++i) r.raw(i, n - 1) = last_col[static_cast<std::size_t>(i)];
    return r;
  }

  // Row-major entries as exact-rational strings.
  std::vector<std::string> serialize_entries() const {
    std::vector<std::string> out;
    out.reserve(a_.size());
    for (const Rat& v : a_) out.push_back(rat_str(v));
    return out;
  }

  static UnipotentMatrix deserialize(int n, const std::vector<std::string>& entries) {
    if (static_cast<int>(entries.size()) != n * n)
      throw std::invalid_argument("UnipotentMatrix::deserialize: wrong entry count");
    UnipotentMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat v(entries[static_cast<std::size_t>(i) * n + j]);
        if (i > j) {
          if (v != 0) throw std::invalid_argument("UnipotentMatrix::deserialize: nonzero below diagonal");
        } else if (i == j) {
          if (v != 1) throw std::invalid_argument("UnipotentMatrix::deserialize: diagonal must be 1");
        } else {
          r.raw(i, j) = v;
        }
      }
    return r;
  }

  Rat& raw(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rat& raw(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("UnipotentMatrix: index out of range");
  }
  void require_same_dim(const UnipotentMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("UnipotentMatrix: dimension mismatch");
  }

  int n_;
  std::vector<Rat> a_;
};

// M^r = sum_{k<n} C(r,k) N^k with N = M - I nilpotent; exact for every
// rational exponent.
inline UnipotentMatrix ut_rational_power(const UnipotentMatrix& m, const Rat& r) {
  const int n = m.dim();
  // strictly upper part of M
  std::vector<Rat> npow(static_cast<std::size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) npow[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  UnipotentMatrix acc = UnipotentMatrix::identity(n);
  Rat coef = 1;
  for (int k = 1; k < n; ++k) {
    coef *= (r - (k - 1)) / k;
    if (k > 1) {
      // npow <- npow * N
      std::vector<Rat> next(static_cast<std::size_t>(n) * n, Rat(0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Rat s = 0;
          for (int t = i + 1; t < j; ++t)
            s += npow[static_cast<std::size_t>(i) * n + t] * m.at(t, j);
          next[static_cast<std::size_t>(i) * n + j] = std::move(s);
        }
      npow = std::move(next);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        acc.raw(i, j) += coef * npow[static_cast<std::size_t>(i) * n + j];
  }
  return acc;
}

inline UnipotentMatrix UnipotentMatrix::inverse() const { return ut_rational_power(*this, Rat(-1)); }

namespace detail {

// Dense rational square matrix, used only inside the product solver.
struct RatGrid {
  int n = 0;
  std::vector<Rat> a;
  explicit RatGrid(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, Rat(0)) {}
  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  static RatGrid identity(int dim) {
    RatGrid g(dim);
    for (int i = 0; i < dim; ++i) g.at(i, i) = 1;
    return g;
  }
  static RatGrid from(const UnipotentMatrix& m) {
    RatGrid g(m.dim());
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) g.at(i, j) = m.raw(i, j);
    return g;
  }
  RatGrid operator*(const RatGrid& o) const {
    RatGrid r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[static_cast<std::size_t>(i) * n + k] == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
  RatGrid operator+(const RatGrid& o) const {
    RatGrid r(n);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
};

}  // namespace detail

// Unique X with prod_i (A_i X) = B, by block recursion on the dimension:
// solve the leading (n-1)-block, then the last column from the triangular
// system M y = v - u, where M = sum_j (prod_{i<j} U_i Y) U_j has constant
// diagonal m and is therefore invertible.
inline UnipotentMatrix ut_solve_product(const std::vector<UnipotentMatrix>& a_list, const UnipotentMatrix& b) {
  if (a_list.empty()) throw std::invalid_argument("ut_solve_product: factor list must be nonempty");
  const int n = b.dim();
  for (const auto& a : a_list)
    if (a.dim() != n) throw std::invalid_argument("ut_solve_product: dimension mismatch");
  if (n == 1) return UnipotentMatrix::identity(1);

  std::vector<UnipotentMatrix> blocks;
  blocks.reserve(a_list.size());
  for (const auto& a : a_list) blocks.push_back(a.leading_block(n - 1));
  const UnipotentMatrix y_block = ut_solve_product(blocks, b.leading_block(n - 1));

  // u: last column of the product with the unknown column set to zero
  const UnipotentMatrix x0 = UnipotentMatrix::assemble(y_block, std::vector<Rat>(static_cast<std::size_t>(n) - 1, Rat(0)));
  UnipotentMatrix full = UnipotentMatrix::identity(n);
  for (const auto& a : a_list) full = full * (a * x0);
  const std::vector<Rat> u = full.last_column_top();
  const std::vector<Rat> v = b.last_column_top();

  detail::RatGrid msum(n - 1);
  detail::RatGrid prefix = detail::RatGrid::identity(n - 1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    msum = msum + prefix * detail::RatGrid::from(blocks[j]);
    prefix = prefix * (detail::RatGrid::from(blocks[j]) * detail::RatGrid::from(y_block));
  }
  const Rat diag(static_cast<long long>(a_list.size()));
  std::vector<Rat> rhs(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i + 1 < n; ++i) rhs[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i)];
  std::vector<Rat> y(static_cast<std::size_t>(n) - 1);
  for (int i = n - 2; i >= 0; --i) {
    if (msum.at(i, i) != diag) throw std::logic_error("ut_solve_product: unexpected diagonal in M");
    Rat acc = rhs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j + 1 < n; ++j) acc -= msum.at(i, j) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc / diag;
  }
  return UnipotentMatrix::assemble(y_block, y);
}

}  // namespace wordeq
