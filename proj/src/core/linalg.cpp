// SPDX-License-Identifier: MIT

#include "linalg.hpp"

#include <algorithm>
#include <utility>

namespace traceform {

QMat inverse(const QMat& m) {
  if (m.rows != m.cols) fail(ErrorCode::Internal, "inverse: matrix not square");
  const size_t n = m.rows;
  QMat a = m;
  QMat inv = QMat::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) fail(ErrorCode::Internal, "inverse: singular matrix");
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rat d = a(col, col);
    for (size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rat f = a(r, col);
      for (size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> solve(const QMat& m, const std::vector<Rat>& b) {
  if (m.rows != m.cols || b.size() != m.rows)
    fail(ErrorCode::Internal, "solve: shape mismatch");
  QMat inv = inverse(m);
  std::vector<Rat> x(m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) x[i] += inv(i, j) * b[j];
  return x;
}

Rat determinant(const QMat& m) {
  if (m.rows != m.cols) fail(ErrorCode::Internal, "determinant: not square");
  const size_t n = m.rows;
  QMat a = m;
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Rat d = a(col, col);
    for (size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat f = a(r, col) / d;
      for (size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

IMat hermite_normal_form(const IMat& input) {
  const size_t n = input.cols;
  if (input.rows < n) fail(ErrorCode::Internal, "hnf: fewer rows than columns");
  IMat a = input;

  size_t pivot_row = 0;
  for (size_t col = 0; col < n && pivot_row < a.rows; ++col) {
    // Clear the column below pivot_row with gcd row operations.
    while (true) {
      size_t nonzero = a.rows;
      for (size_t r = pivot_row; r < a.rows; ++r) {
        if (a(r, col) != 0 &&
            (nonzero == a.rows ||
             abs(a(r, col)) < abs(a(nonzero, col)))) {
          nonzero = r;
        }
      }
      if (nonzero == a.rows) {
        fail(ErrorCode::Internal, "hnf: matrix not of full column rank");
      }
      if (nonzero != pivot_row) {
        for (size_t j = 0; j < n; ++j) std::swap(a(nonzero, j), a(pivot_row, j));
      }
      bool reduced_all = true;
      const Int p = a(pivot_row, col);
      for (size_t r = pivot_row + 1; r < a.rows; ++r) {
        if (a(r, col) == 0) continue;
        // Floor-divide so remainders stay small in absolute value.
        Int q = a(r, col) / p;
        for (size_t j = 0; j < n; ++j) a(r, j) -= q * a(pivot_row, j);
        if (a(r, col) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (a(pivot_row, col) < 0) {
      for (size_t j = 0; j < n; ++j) a(pivot_row, j) = -a(pivot_row, j);
    }
    ++pivot_row;
  }
  if (pivot_row != n) fail(ErrorCode::Internal, "hnf: rank deficiency");

  // Reduce entries above each pivot into [0, pivot).
  IMat h(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h(i, j) = a(i, j);
  for (size_t col = 1; col < n; ++col) {
    const Int p = h(col, col);
    for (size_t r = 0; r < col; ++r) {
      Int q = h(r, col) / p;
      if (h(r, col) - q * p < 0) q -= 1;  // force remainder into [0, p)
      if (q == 0) continue;
      for (size_t j = 0; j < n; ++j) h(r, j) -= q * h(col, j);
    }
  }
  return h;
}

namespace {

// Row/column elementary operations tracked in u (rows) and v (columns).
void swap_rows(IMat& m, IMat& u, size_t r1, size_t r2) {
  for (size_t j = 0; j < m.cols; ++j) std::swap(m(r1, j), m(r2, j));
  for (size_t j = 0; j < u.cols; ++j) std::swap(u(r1, j), u(r2, j));
}

void swap_cols(IMat& m, IMat& v, size_t c1, size_t c2) {
  for (size_t i = 0; i < m.rows; ++i) std::swap(m(i, c1), m(i, c2));
  for (size_t i = 0; i < v.rows; ++i) std::swap(v(i, c1), v(i, c2));
}

void add_row(IMat& m, IMat& u, size_t dst, size_t src, const Int& f) {
  for (size_t j = 0; j < m.cols; ++j) m(dst, j) += f * m(src, j);
  for (size_t j = 0; j < u.cols; ++j) u(dst, j) += f * u(src, j);
}

void add_col(IMat& m, IMat& v, size_t dst, size_t src, const Int& f) {
  for (size_t i = 0; i < m.rows; ++i) m(i, dst) += f * m(i, src);
  for (size_t i = 0; i < v.rows; ++i) v(i, dst) += f * v(i, src);
}

void negate_row(IMat& m, IMat& u, size_t r) {
  for (size_t j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
  for (size_t j = 0; j < u.cols; ++j) u(r, j) = -u(r, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IMat& input) {
  IMat d = input;
  IMat u = IMat::identity(d.rows);
  IMat v = IMat::identity(d.cols);
  const size_t n = std::min(d.rows, d.cols);

  for (size_t k = 0; k < n; ++k) {
    // Find the entry of smallest nonzero magnitude in the trailing block and
    // move it to (k, k); repeat elimination until row k and column k are
    // clear outside the pivot.
    while (true) {
      size_t pr = d.rows, pc = d.cols;
      for (size_t i = k; i < d.rows; ++i)
        for (size_t j = k; j < d.cols; ++j)
          if (d(i, j) != 0 &&
              (pr == d.rows || abs(d(i, j)) < abs(d(pr, pc))))
            pr = i, pc = j;
      if (pr == d.rows) goto done_block;  // trailing block is zero
      if (pr != k) swap_rows(d, u, pr, k);
      if (pc != k) swap_cols(d, v, pc, k);

      bool dirty = false;
      for (size_t i = k + 1; i < d.rows; ++i) {
        if (d(i, k) == 0) continue;
        add_row(d, u, i, k, -(d(i, k) / d(k, k)));
        if (d(i, k) != 0) dirty = true;
      }
      for (size_t j = k + 1; j < d.cols; ++j) {
        if (d(k, j) == 0) continue;
        add_col(d, v, j, k, -(d(k, j) / d(k, k)));
        if (d(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide every remaining entry; if not, fold an offending
      // row in and re-eliminate.
      bool divides_all = true;
      for (size_t i = k + 1; i < d.rows && divides_all; ++i)
        for (size_t j = k + 1; j < d.cols && divides_all; ++j)
          if (d(i, j) % d(k, k) != 0) {
            add_row(d, u, k, i, Int(1));
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d(k, k) < 0) negate_row(d, u, k);
  }
done_block:

  return SmithDecomposition{std::move(d), std::move(u), std::move(v)};
}

}  // namespace traceform
