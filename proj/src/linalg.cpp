#include "hilali/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilali {

namespace {

void makePrimitive(IntegerRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y over sorted sparse rows.
IntegerRow combine(const Integer& a, const IntegerRow& x, const Integer& b, const IntegerRow& y) {
  IntegerRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      tmp = a * x[i].second - b * y[j].second;
      if (tmp != 0) out.emplace_back(x[i].first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntegerRow toPrimitive(const RationalRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer scaled = l / v.get_den() * v.get_num();
    out.emplace_back(c, std::move(scaled));
  }
  makePrimitive(out);
  return out;
}

// ------------------------------------------------------------------ Echelon

IntegerRow Echelon::reduce(IntegerRow row) const {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead >= pivotOf_.size()) throw std::out_of_range("Echelon: column out of range");
    const long p = pivotOf_[lead];
    if (p < 0) break;
    const IntegerRow& pivot = rows_[static_cast<std::size_t>(p)];
    Integer g;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    Integer a = pivot.front().second / g;
    Integer b = row.front().second / g;
    row = combine(a, row, b, pivot);
    makePrimitive(row);
  }
  return row;
}

bool Echelon::insert(const RationalRow& row) { return insert(toPrimitive(row)); }

bool Echelon::insert(IntegerRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  pivotOf_[row.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool Echelon::contains(const RationalRow& row) const { return reduce(toPrimitive(row)).empty(); }

std::vector<std::size_t> Echelon::pivotColumns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivotOf_.size(); ++c)
    if (pivotOf_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<RationalRow> Echelon::reducedBasis() const {
  const auto pivots = pivotColumns();
  std::vector<RationalRow> basis;
  basis.reserve(pivots.size());
  for (auto c : pivots) {
    const IntegerRow& r = rows_[static_cast<std::size_t>(pivotOf_[c])];
    RationalRow q;
    q.reserve(r.size());
    for (const auto& [col, v] : r) q.emplace_back(col, Scalar(v, r.front().second));
    for (auto& [col, v] : q) v.canonicalize();
    basis.push_back(std::move(q));
  }
  // Back substitution, last pivot first.
  for (std::size_t k = basis.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    const RationalRow& pivotRow = basis[k];
    for (std::size_t i = 0; i < k; ++i) {
      RationalRow& row = basis[i];
      auto it = std::lower_bound(row.begin(), row.end(), col,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == row.end() || it->first != col) continue;
      const Scalar factor = it->second;
      RationalRow merged;
      merged.reserve(row.size() + pivotRow.size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < pivotRow.size()) {
        if (b == pivotRow.size() || (a < row.size() && row[a].first < pivotRow[b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || pivotRow[b].first < row[a].first) {
          merged.emplace_back(pivotRow[b].first, -factor * pivotRow[b].second);
          ++b;
        } else {
          Scalar v = row[a].second - factor * pivotRow[b].second;
          if (v != 0) merged.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
  }
  return basis;
}

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t columns) {
  std::vector<const RationalRow*> order;
  order.reserve(rows.size());
  for (const auto& r : rows)
    if (!r.empty()) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const RationalRow* a, const RationalRow* b) { return a->size() < b->size(); });
  Echelon e(columns);
  for (const auto* r : order) e.insert(*r);
  return e.rank();
}

std::vector<RationalRow> leftKernel(const std::vector<RationalRow>& rows, std::size_t columns) {
  const std::size_t sources = rows.size();
  Echelon e(columns + sources);
  std::vector<RationalRow> kernel;
  for (std::size_t i = 0; i < sources; ++i) {
    RationalRow augmented = rows[i];
    augmented.emplace_back(columns + i, Scalar(1));
    IntegerRow residual = e.reduce(toPrimitive(augmented));
    if (residual.front().first >= columns) {
      RationalRow k;
      k.reserve(residual.size());
      for (const auto& [c, v] : residual) k.emplace_back(c - columns, Scalar(v));
      kernel.push_back(std::move(k));
    } else {
      e.insert(std::move(residual));
    }
  }
  return rowSpaceBasis(kernel, sources);
}

std::vector<RationalRow> rowSpaceBasis(const std::vector<RationalRow>& rows, std::size_t columns) {
  Echelon e(columns);
  for (const auto& r : rows)
    if (!r.empty()) e.insert(r);
  return e.reducedBasis();
}

// ------------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (a != 0) out[i] += a * v[j];
    }
  }
  return out;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void Matrix::setColumn(std::size_t j, const std::vector<Scalar>& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

RationalRow Matrix::sparseRow(std::size_t i) const {
  RationalRow out;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(i, j) != 0) out.emplace_back(j, (*this)(i, j));
  return out;
}

std::size_t Matrix::rank() const {
  std::vector<RationalRow> rowsList;
  rowsList.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rowsList.push_back(sparseRow(i));
  return hilali::rank(rowsList, cols_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: size mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix difference: size mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

bool isZeroVector(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

}  // namespace hilali
