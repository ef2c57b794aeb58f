#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "coderiv/rational.hpp"

namespace coderiv {

// Dense matrix over an exact field F (Rational, or a prime field).
// Everything here is plain Gaussian elimination, done exactly.
template <class F>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<F>> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(r, std::vector<F>(c, F(0))) {}

  std::vector<F> &operator[](int i) { return a[i]; }
  const std::vector<F> &operator[](int i) const { return a[i]; }
};

// Reduce m to reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<int> rref(Matrix<F> &m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!scalar_is_zero(m[i][col])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m.a[p], m.a[row]);
    F inv = F(1) / m[row][col];
    for (int j = col; j < m.cols; ++j) m[row][j] = m[row][j] * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || scalar_is_zero(m[i][col])) continue;
      F f = m[i][col];
      for (int j = col; j < m.cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the null space of m, one vector per free column, in reduced
// echelon form (each vector has a 1 in its free column and zeros in the
// other free columns).
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols, F(0));
    v[free] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, if any.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F> &m,
                                    const std::vector<F> &b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("right-hand side has wrong length");
  Matrix<F> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug[i][j] = m[i][j];
    aug[i][m.cols] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<F> x(m.cols, F(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][m.cols];
  return x;
}

// Incremental row-space accumulator: keeps its rows in echelon form and
// reports whether each inserted vector enlarged the span.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool contains(std::vector<F> v) const { return !reduce(v); }

  // Returns true if v was independent of the current span (and was added).
  bool insert(std::vector<F> v) {
    if (!reduce(v)) return false;
    int lead = leading_index(v);
    F inv = F(1) / v[lead];
    for (F &x : v) x = x * inv;
    // Keep reduced form: clear this column from the existing rows.
    for (auto &row : rows_) {
      if (scalar_is_zero(row[lead])) continue;
      F f = row[lead];
      for (int j = 0; j < cols_; ++j) row[j] = row[j] - f * v[j];
    }
    auto it = rows_.begin();
    while (it != rows_.end() && leading_index(*it) < lead) ++it;
    rows_.insert(it, std::move(v));
    return true;
  }

 private:
  // Reduce v against the stored rows; true if a nonzero remainder is left.
  bool reduce(std::vector<F> &v) const {
    for (const auto &row : rows_) {
      int lead = leading_index(row);
      if (scalar_is_zero(v[lead])) continue;
      F f = v[lead];
      for (int j = 0; j < cols_; ++j) v[j] = v[j] - f * row[j];
    }
    for (const F &x : v)
      if (!scalar_is_zero(x)) return true;
    return false;
  }

  int leading_index(const std::vector<F> &v) const {
    for (int j = 0; j < cols_; ++j)
      if (!scalar_is_zero(v[j])) return j;
    throw std::logic_error("zero row in row space");
  }

  int cols_;
  std::vector<std::vector<F>> rows_;
};

}  // namespace coderiv
