#pragma once

#include "godeaux/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace godeaux {

/// Dense row-major matrix. Entries default to zero.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw std::invalid_argument("matrix data length does not match its shape");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix from nested rows; all rows must have equal length.
  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixQ = DenseMatrix<Rational>;
using MatrixZ = DenseMatrix<Integer>;
using VectorQ = std::vector<Rational>;

struct RrefResult {
  MatrixQ reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
RrefResult rref(MatrixQ m);

std::size_t rank(const MatrixQ& m);

/// Basis of the right null space, one vector per free column of rref(m);
/// the vector for free column j has a 1 in position j.
std::vector<VectorQ> kernel_basis(const MatrixQ& m);

/// Coefficients c with v = sum c_i basis_i, or nullopt when v is outside the
/// span. When the basis is dependent the coefficients of redundant vectors
/// are zero.
std::optional<VectorQ> membership(const VectorQ& v, std::span<const VectorQ> basis);

/// Matrix whose columns are the given vectors (all of length `length`).
MatrixQ columns_to_matrix(std::span<const VectorQ> columns, std::size_t length);

struct SmithForm {
  MatrixZ d;  ///< diagonal, d_1 | d_2 | ..., nonnegative
  MatrixZ u;  ///< unimodular, rows x rows
  MatrixZ v;  ///< unimodular, cols x cols
};

/// u * a * v == d.
SmithForm smith_normal_form(const MatrixZ& a);

/// Diagonal entries of the Smith form, length min(rows, cols).
std::vector<Integer> smith_invariants(const MatrixZ& a);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const MatrixZ& a);

/// Sparse vector: strictly increasing indices, nonzero values.
using SparseVectorQ = std::vector<std::pair<std::size_t, Rational>>;

SparseVectorQ to_sparse(std::span<const Rational> dense);
VectorQ to_dense(const SparseVectorQ& v, std::size_t length);

/// Incrementally maintained row space in fully reduced echelon form.
///
/// Every stored row has leading entry 1 at its pivot and is zero at every
/// other pivot column, so reduction of a new vector touches each stored row
/// at most once.
class RowSpace {
 public:
  explicit RowSpace(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == length_; }

  /// v minus its projection onto the stored rows along pivot coordinates.
  SparseVectorQ reduce(const SparseVectorQ& v) const;
  bool contains(const SparseVectorQ& v) const { return reduce(v).empty(); }

  /// Adds v; returns true when the rank grew.
  bool insert(const SparseVectorQ& v);

  /// Stored rows ordered by pivot column.
  std::vector<SparseVectorQ> basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t length_;
  std::map<std::size_t, SparseVectorQ> rows_;
};

}  // namespace godeaux
