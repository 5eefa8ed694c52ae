#include "godeaux/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace godeaux {

RrefResult rref(MatrixQ m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const MatrixQ& m) {
  RowSpace space(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) space.insert(to_sparse(m.row(i)));
  return space.rank();
}

std::vector<VectorQ> kernel_basis(const MatrixQ& m) {
  const RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;

  std::vector<VectorQ> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivot_columns[k]] = -rr.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixQ columns_to_matrix(std::span<const VectorQ> columns, std::size_t length) {
  MatrixQ m(length, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != length) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < length; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::optional<VectorQ> membership(const VectorQ& v, std::span<const VectorQ> basis) {
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  // Augmented system [B | v]; v lies in the span iff the last column is not a pivot.
  MatrixQ aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
  const RrefResult rr = rref(std::move(aug));
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == k) return std::nullopt;
  VectorQ coeffs(k);
  for (std::size_t r = 0; r < rr.rank; ++r) coeffs[rr.pivot_columns[r]] = rr.reduced(r, k);
  return coeffs;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void add_row_multiple(MatrixZ& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(MatrixZ& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

}  // namespace

SmithForm smith_normal_form(const MatrixZ& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  MatrixZ d = a;
  MatrixZ u = MatrixZ::identity(rows);
  MatrixZ v = MatrixZ::identity(cols);

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (pi == rows || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Integer> smith_invariants(const MatrixZ& a) {
  const SmithForm s = smith_normal_form(a);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out.push_back(s.d(i, i));
  return out;
}

Integer determinant(const MatrixZ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  MatrixZ m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Sparse row space

SparseVectorQ to_sparse(std::span<const Rational> dense) {
  SparseVectorQ out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
  return out;
}

VectorQ to_dense(const SparseVectorQ& v, std::size_t length) {
  VectorQ out(length);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

namespace {

// a + factor * b, both sorted by index.
SparseVectorQ axpy(const SparseVectorQ& a, const Rational& factor, const SparseVectorQ& b) {
  SparseVectorQ out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + factor * b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* entry(const SparseVectorQ& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it == v.end() || it->first != index) return nullptr;
  return &it->second;
}

}  // namespace

SparseVectorQ RowSpace::reduce(const SparseVectorQ& v) const {
  SparseVectorQ r = v;
  // Stored rows vanish on each other's pivots, so the pivot entries of v are
  // exactly the multiples to remove.
  for (const auto& [col, val] : v) {
    auto it = rows_.find(col);
    if (it == rows_.end()) continue;
    r = axpy(r, -val, it->second);
  }
  return r;
}

bool RowSpace::insert(const SparseVectorQ& v) {
  for (const auto& [i, x] : v) {
    if (i >= length_) throw std::out_of_range("vector index outside row space");
  }
  SparseVectorQ r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().first;
  const Rational inv = 1 / r.front().second;
  for (auto& [i, x] : r) x *= inv;
  for (auto& [p, row] : rows_) {
    if (const Rational* e = entry(row, pivot)) {
      const Rational factor = -*e;
      row = axpy(row, factor, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVectorQ> RowSpace::basis() const {
  std::vector<SparseVectorQ> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> RowSpace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

}  // namespace godeaux
