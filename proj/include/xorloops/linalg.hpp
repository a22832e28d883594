#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "xorloops/edge_set.hpp"
#include "xorloops/scalar.hpp"

namespace xorloops {

// ---------------------------------------------------------------------------
// Z/2 linear algebra over EdgeSet vectors.

/// Incremental reduced row-echelon basis. With a nonzero capacity each row
/// also remembers which inserted vectors it combines, so membership queries
/// can return a certificate.
class Z2Echelon {
 public:
  explicit Z2Echelon(std::size_t dim, std::size_t capacity = 0)
      : dim_(dim), capacity_(capacity) {}

  /// Adds `v`; returns true when the rank grew.
  bool insert(const EdgeSet& v);

  /// Reduces `v` against the stored rows.
  EdgeSet reduce(EdgeSet v) const;

  bool contains(const EdgeSet& v) const { return reduce(v).empty(); }

  /// Indicator (over insertion order, rejected inserts included) of inserted
  /// vectors summing to `v`; nullopt when `v` is outside the span.
  std::optional<EdgeSet> combination(const EdgeSet& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  struct Row {
    int pivot;
    EdgeSet value;
    EdgeSet combo;
  };
  std::size_t dim_;
  std::size_t capacity_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

/// Basis of {v : <row, v> = 0 for every row}, in reduced form.
std::vector<EdgeSet> z2_nullspace(const std::vector<EdgeSet>& rows, std::size_t dim);

/// One solution of rows * x = rhs, free variables set to zero.
std::optional<EdgeSet> z2_solve(const std::vector<EdgeSet>& rows, const std::vector<bool>& rhs,
                                std::size_t dim);

/// Inverse of a square Z/2 matrix given by rows; nullopt when singular.
std::optional<std::vector<EdgeSet>> z2_inverse(const std::vector<EdgeSet>& rows);

// ---------------------------------------------------------------------------
// Dense matrices over a Scalar.

template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<Scalar>::from_int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Fraction-free (Bareiss) determinant; exact for rationals.
inline Rational determinant(DenseMatrix<Rational> m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return Rational(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Rational d = m(n - 1, n - 1);
  return sign > 0 ? d : Rational(-d);
}

/// Partially pivoted LU determinant.
inline double determinant(DenseMatrix<double> m) {
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == 0.0) return 0.0;
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

/// Solves a * x = b by Gaussian elimination; nullopt when `a` is singular.
template <class Scalar>
std::optional<std::vector<Scalar>> solve(DenseMatrix<Scalar> a, std::vector<Scalar> b) {
  using T = ScalarTraits<Scalar>;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    if constexpr (T::exact) {
      while (p < n && T::is_zero(a(p, k))) ++p;
      if (p == n) return std::nullopt;
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
      if (a(p, k) == 0.0) return std::nullopt;
    }
    if (p != k) {
      a.swap_rows(p, k);
      std::swap(b[p], b[k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || T::is_zero(a(i, k))) continue;
      const Scalar f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

/// Sign of a permutation given as an image array.
int permutation_sign(const std::vector<int>& image);

}  // namespace xorloops
