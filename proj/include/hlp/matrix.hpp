#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hlp/rational.hpp"

namespace hlp {

// Dense matrix over the rationals, row-major. Elimination is fraction-free
// (Bareiss) with deterministic pivoting: the first row with a nonzero entry,
// in row order.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_zero() const;

  QMatrix transposed() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  // Exact determinant by fraction-free elimination. Throws
  // std::invalid_argument on non-square input. det of the empty matrix is 1.
  Rational det() const;

  // Exact rank over the rationals.
  std::size_t rank() const;

  // Deterministic basis of the right kernel (empty when non-singular).
  std::vector<std::vector<Rational>> nullspace() const;

  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const QMatrix& other) const { return !(*this == other); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace hlp
