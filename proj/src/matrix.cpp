#include "hlp/matrix.hpp"

#include <stdexcept>

namespace hlp {
namespace {

// Clears denominators row by row so the Bareiss core runs over integers.
// Returns the product of the row multipliers.
Integer integerize(const QMatrix& m, std::vector<std::vector<Integer>>& out) {
  const std::size_t r = m.rows(), c = m.cols();
  out.assign(r, std::vector<Integer>(c));
  Integer total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    Integer mult = 1;
    for (std::size_t j = 0; j < c; ++j)
      mult = boost::multiprecision::lcm(mult, denominator(m.at(i, j)));
    for (std::size_t j = 0; j < c; ++j) {
      const Rational& x = m.at(i, j);
      out[i][j] = numerator(x) * (mult / denominator(x));
    }
    total *= mult;
  }
  return total;
}

}  // namespace

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("ragged matrix initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool QMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Rational QMatrix::det() const {
  if (!is_square())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;

  std::vector<std::vector<Integer>> a;
  Integer scale = integerize(*this, a);

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1], scale);
}

std::size_t QMatrix::rank() const {
  std::vector<std::vector<Integer>> a;
  integerize(*this, a);

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a[pivot][col] == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j)
        a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
  // Rational Gauss-Jordan; deterministic by first-nonzero pivoting.
  std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && a[pivot][col] == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(a[row], a[pivot]);
    Rational inv = a[row][col];
    for (std::size_t j = col; j < cols_; ++j) a[row][j] /= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols_; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hlp
