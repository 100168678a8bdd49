#pragma once

// Exact linear algebra over the rationals.
//
// Sparse elimination keeps rows as primitive integer vectors and combines
// them fraction-free (a*r - b*p, then divide by the content), which keeps
// coefficient growth in check on the mostly-±1 matrices produced by
// differentials. Small dense problems (quotient multiplication tables,
// pairings) go through Matrix.

#include <cstddef>
#include <utility>
#include <vector>

#include "hilali/rational.hpp"

namespace hilali {

using RationalRow = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by column
using IntegerRow = std::vector<std::pair<std::size_t, Integer>>;

/// Clears denominators and divides by the content; the leading entry ends up
/// positive. Entries must be sorted by column and nonzero.
IntegerRow toPrimitive(const RationalRow& row);

/// Incremental row echelon form. Rows are kept with distinct leading columns.
class Echelon {
 public:
  explicit Echelon(std::size_t columns = 0) : pivotOf_(columns, -1) {}

  /// Returns true when the row was independent of the rows already present.
  bool insert(const RationalRow& row);
  bool insert(IntegerRow row);

  /// Membership in the row span.
  bool contains(const RationalRow& row) const;

  /// Remainder of `row` after leading-term reduction; empty iff in the span.
  IntegerRow reduce(IntegerRow row) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return pivotOf_.size(); }
  std::vector<std::size_t> pivotColumns() const;

  /// Reduced row echelon basis of the span, leading coefficients 1, sorted by
  /// pivot column.
  std::vector<RationalRow> reducedBasis() const;

 private:
  std::vector<IntegerRow> rows_;
  std::vector<long> pivotOf_;
};

/// Rank of the matrix whose rows are given.
std::size_t rank(const std::vector<RationalRow>& rows, std::size_t columns);

/// Basis of {c : sum_i c_i rows[i] = 0}, i.e. the kernel of the map sending
/// the i-th source basis vector to rows[i]. Returned in reduced echelon form
/// over source coordinates.
std::vector<RationalRow> leftKernel(const std::vector<RationalRow>& rows, std::size_t columns);

/// Reduced row echelon basis of the span of `rows`.
std::vector<RationalRow> rowSpaceBasis(const std::vector<RationalRow>& rows, std::size_t columns);

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::vector<Scalar> column(std::size_t j) const;
  void setColumn(std::size_t j, const std::vector<Scalar>& v);
  bool isZero() const;
  std::size_t rank() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  RationalRow sparseRow(std::size_t i) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

bool isZeroVector(const std::vector<Scalar>& v);

}  // namespace hilali
