// SPDX-License-Identifier: MIT
//
// Small dense exact linear algebra: rational Gauss-Jordan inversion plus the
// two integer normal forms (Hermite, Smith) used for lattice bookkeeping.
// Matrices here are tiny (rank of a root system, at most a few dozen rows),
// so clarity wins over asymptotics throughout.

#pragma once

#include "numeric.hpp"

#include <cstddef>
#include <vector>

namespace traceform {

template <class T>
struct Mat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  T& operator()(size_t r, size_t c) { return a[r * cols + c]; }
  const T& operator()(size_t r, size_t c) const { return a[r * cols + c]; }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) fail(ErrorCode::Internal, "mat_mul shape mismatch");
  Mat<T> z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const T& xik = x(i, k);
      if (xik == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> t(x.cols, x.rows);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
  return t;
}

inline QMat to_rational(const IMat& m) {
  QMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

// Exact inverse of a square rational matrix. Throws Internal on a singular
// input (callers only invert matrices that are nonsingular by construction).
QMat inverse(const QMat& m);

// Solves m * x = b exactly for square nonsingular m.
std::vector<Rat> solve(const QMat& m, const std::vector<Rat>& b);

Rat determinant(const QMat& m);

// Row-style Hermite normal form of an integer matrix of full column rank:
// returns the canonical upper-triangular n x n basis (positive diagonal,
// entries above a pivot reduced into [0, pivot)) of the row lattice of `m`.
IMat hermite_normal_form(const IMat& m);

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal with
// d(i,i) | d(i+1,i+1). Diagonal entries are nonnegative.
struct SmithDecomposition {
  IMat d;
  IMat u;
  IMat v;
};
SmithDecomposition smith_normal_form(const IMat& m);

}  // namespace traceform
