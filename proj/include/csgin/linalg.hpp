#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "csgin/field.hpp"

namespace csgin {

/// Dense matrix over a single field.
template <FieldElement K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t characteristic)
      : rows_(rows), cols_(cols), characteristic_(characteristic),
        data_(rows * cols, K::from_int(0, characteristic)) {}

  static Matrix identity(std::size_t n, std::uint32_t characteristic) {
    Matrix m(n, n, characteristic);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::from_int(1, characteristic);
    return m;
  }

  /// Builds from integer rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols,
                          std::uint32_t characteristic) {
    Matrix m(rows.size(), cols, characteristic);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = K::from_int(rows[i][j], characteristic);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t characteristic() const { return characteristic_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<K> row(std::size_t r) const {
    return std::vector<K>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, characteristic_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix s(rows_, cols.size(), characteristic_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
    return s;
  }

  Matrix select_rows(const std::vector<std::size_t>& rows) const {
    Matrix s(rows.size(), cols_, characteristic_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(rows[i], j);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    if (a.characteristic_ != b.characteristic_) throw FieldError("mixed characteristics");
    Matrix c(a.rows_, b.cols_, a.characteristic_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Throws FieldError if any entry lives in a different characteristic.
  void check_field() const {
    for (const K& e : data_)
      if (e.characteristic() != characteristic_) throw FieldError("matrix entries in mixed characteristics");
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t characteristic_ = 0;
  std::vector<K> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <FieldElement K>
struct Echelon {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;
  K determinant_factor;  // product of pivots times row-swap signs
};

template <FieldElement K>
Echelon<K> row_reduce(Matrix<K> m) {
  m.check_field();
  const std::uint32_t ch = m.characteristic();
  K det = K::from_int(1, ch);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      det = -det;
    }
    K inv = m(r, c).inverse();
    det *= m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), det};
}

template <FieldElement K>
std::size_t rank(const Matrix<K>& m) {
  return row_reduce(m).pivots.size();
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <FieldElement K>
std::vector<std::vector<K>> kernel(const Matrix<K>& m) {
  Echelon<K> e = row_reduce(m);
  const std::uint32_t ch = m.characteristic();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K::from_int(0, ch));
    v[free] = K::from_int(1, ch);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldElement K>
K determinant(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Echelon<K> e = row_reduce(m);
  if (e.pivots.size() < m.rows()) return K::from_int(0, m.characteristic());
  return e.determinant_factor;
}

template <FieldElement K>
struct LinearSummary {
  std::size_t rank = 0;
  std::optional<K> determinant;
  std::vector<std::vector<K>> kernel;
};

/// Rank, determinant (square input only) and kernel basis by one elimination.
template <FieldElement K>
LinearSummary<K> rank_det_kernel(const Matrix<K>& m) {
  LinearSummary<K> out;
  Echelon<K> e = row_reduce(m);
  out.rank = e.pivots.size();
  if (m.rows() == m.cols())
    out.determinant = out.rank == m.rows() ? e.determinant_factor : K::from_int(0, m.characteristic());
  out.kernel = kernel(m);
  return out;
}

/// Inverse of a square matrix; throws FieldError when singular.
template <FieldElement K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, m.characteristic());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K::from_int(1, m.characteristic());
  }
  Echelon<K> e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw FieldError("matrix is singular");
  Matrix<K> inv(n, n, m.characteristic());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Index of the first row that lies in the span of the rows before it, if any.
template <FieldElement K>
std::optional<std::size_t> first_dependent_row(const Matrix<K>& m) {
  for (std::size_t r = 1; r <= m.rows(); ++r) {
    std::vector<std::size_t> prefix(r);
    for (std::size_t i = 0; i < r; ++i) prefix[i] = i;
    if (rank(m.select_rows(prefix)) < r) return r - 1;
  }
  return std::nullopt;
}

}  // namespace csgin
