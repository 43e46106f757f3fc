#include "rootpoly/matrix.hpp"

#include <algorithm>

namespace rootpoly {

QMat::QMat(std::vector<QVec> rws) : rows(rws.size()), cols(rws.empty() ? 0 : rws[0].size()), a(std::move(rws)) {
  for (const QVec& r : a)
    if (r.size() != cols) throw std::invalid_argument("QMat: ragged rows");
}

ZMat::ZMat(std::vector<IVec> rws) : rows(rws.size()), cols(rws.empty() ? 0 : rws[0].size()), a(std::move(rws)) {
  for (const IVec& r : a)
    if (r.size() != cols) throw std::invalid_argument("ZMat: ragged rows");
}

QMat QMat::identity(size_t n) {
  QMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

ZMat ZMat::identity(size_t n) {
  ZMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

QMat QMat::transposed() const {
  QMat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
  return t;
}

ZMat ZMat::transposed() const {
  ZMat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
  return t;
}

QMat ZMat::to_rational() const {
  QMat q(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) q.a[i][j] = Rat(a[i][j]);
  return q;
}

ZMat mul(const ZMat& A, const ZMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mul: dimension mismatch");
  ZMat C(A.rows, B.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      if (A.a[i][k] == 0) continue;
      for (size_t j = 0; j < B.cols; ++j) C.a[i][j] += A.a[i][k] * B.a[k][j];
    }
  return C;
}

QMat mul(const QMat& A, const QMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mul: dimension mismatch");
  QMat C(A.rows, B.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      if (A.a[i][k] == 0) continue;
      for (size_t j = 0; j < B.cols; ++j) C.a[i][j] += A.a[i][k] * B.a[k][j];
    }
  return C;
}

QVec mul(const QMat& A, const QVec& x) {
  if (A.cols != x.size()) throw std::invalid_argument("mul: dimension mismatch");
  QVec y(A.rows, Rat(0));
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) y[i] += A.a[i][j] * x[j];
  return y;
}

IVec mul(const ZMat& A, const IVec& x) {
  if (A.cols != x.size()) throw std::invalid_argument("mul: dimension mismatch");
  IVec y(A.rows, Int(0));
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) y[i] += A.a[i][j] * x[j];
  return y;
}

// Row echelon reduction in place; returns pivot columns.
static std::vector<size_t> echelon(QMat& A) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < A.cols && row < A.rows; ++col) {
    size_t p = row;
    while (p < A.rows && A.a[p][col] == 0) ++p;
    if (p == A.rows) continue;
    std::swap(A.a[p], A.a[row]);
    Rat inv = 1 / A.a[row][col];
    for (size_t j = col; j < A.cols; ++j) A.a[row][j] *= inv;
    for (size_t i = 0; i < A.rows; ++i) {
      if (i == row || A.a[i][col] == 0) continue;
      Rat f = A.a[i][col];
      for (size_t j = col; j < A.cols; ++j) A.a[i][j] -= f * A.a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(QMat A) { return echelon(A).size(); }

std::optional<QVec> solve_rational(const QMat& A, const QVec& b) {
  if (A.rows != b.size()) throw std::invalid_argument("solve_rational: dimension mismatch");
  QMat aug(A.rows, A.cols + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.a[i][j] = A.a[i][j];
    aug.a[i][A.cols] = b[i];
  }
  std::vector<size_t> pivots = echelon(aug);
  // Inconsistent if the last column is a pivot.
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
  // Underdetermined unless every variable column is a pivot.
  if (pivots.size() != A.cols) return std::nullopt;
  QVec x(A.cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.a[i][A.cols];
  return x;
}

std::vector<QVec> nullspace(const QMat& A) {
  QMat R = A;
  std::vector<size_t> pivots = echelon(R);
  std::vector<bool> is_pivot(A.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (size_t free_col = 0; free_col < A.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(A.cols, Rat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.a[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMat> inverse(const QMat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
  size_t n = A.rows;
  QMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.a[i][j] = A.a[i][j];
    aug.a[i][n + i] = 1;
  }
  std::vector<size_t> pivots = echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.a[i][j] = aug.a[i][n + j];
  return inv;
}

Rat determinant(QMat A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant: not square");
  size_t n = A.rows;
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && A.a[p][col] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(A.a[p], A.a[col]);
      det = -det;
    }
    det *= A.a[col][col];
    Rat inv = 1 / A.a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (A.a[i][col] == 0) continue;
      Rat f = A.a[i][col] * inv;
      for (size_t j = col; j < n; ++j) A.a[i][j] -= f * A.a[col][j];
    }
  }
  return det;
}

Int determinant(const ZMat& A) {
  Rat d = determinant(A.to_rational());
  if (!is_integral(d)) throw std::logic_error("determinant: integer matrix with non-integer determinant");
  return d.get_num();
}

SmithForm smith_normal_form(const ZMat& A) {
  ZMat D = A;
  ZMat U = ZMat::identity(A.rows);
  ZMat V = ZMat::identity(A.cols);

  auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };

  size_t t = 0;
  size_t n = std::min(A.rows, A.cols);
  while (t < n) {
    // Pivot: minimal nonzero absolute value in the remaining block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < D.rows; ++i)
      for (size_t j = t; j < D.cols; ++j) {
        if (D.a[i][j] == 0) continue;
        if (!found || abs_int(D.a[i][j]) < abs_int(D.a[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(D.a[pi], D.a[t]);
    std::swap(U.a[pi], U.a[t]);
    if (pj != t) {
      for (size_t i = 0; i < D.rows; ++i) std::swap(D.a[i][pj], D.a[i][t]);
      for (size_t i = 0; i < V.rows; ++i) std::swap(V.a[i][pj], V.a[i][t]);
    }

    bool clean = true;
    // Clear column t.
    for (size_t i = t + 1; i < D.rows; ++i) {
      if (D.a[i][t] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), D.a[i][t].get_mpz_t(), D.a[t][t].get_mpz_t());
      if (q != 0) {
        for (size_t j = 0; j < D.cols; ++j) D.a[i][j] -= q * D.a[t][j];
        for (size_t j = 0; j < U.cols; ++j) U.a[i][j] -= q * U.a[t][j];
      }
      if (D.a[i][t] != 0) clean = false;
    }
    // Clear row t.
    for (size_t j = t + 1; j < D.cols; ++j) {
      if (D.a[t][j] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), D.a[t][j].get_mpz_t(), D.a[t][t].get_mpz_t());
      if (q != 0) {
        for (size_t i = 0; i < D.rows; ++i) D.a[i][j] -= q * D.a[i][t];
        for (size_t i = 0; i < V.rows; ++i) V.a[i][j] -= q * V.a[i][t];
      }
      if (D.a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; re-pivot in the same block

    // Divisibility: ensure D[t][t] divides every later entry.
    bool divides_all = true;
    for (size_t i = t + 1; i < D.rows && divides_all; ++i)
      for (size_t j = t + 1; j < D.cols && divides_all; ++j) {
        if (D.a[i][j] % D.a[t][t] != 0) {
          // Add row i to row t, then re-reduce.
          for (size_t c = 0; c < D.cols; ++c) D.a[t][c] += D.a[i][c];
          for (size_t c = 0; c < U.cols; ++c) U.a[t][c] += U.a[i][c];
          divides_all = false;
        }
      }
    if (!divides_all) continue;

    if (D.a[t][t] < 0) {
      for (size_t j = 0; j < D.cols; ++j) D.a[t][j] = -D.a[t][j];
      for (size_t j = 0; j < U.cols; ++j) U.a[t][j] = -U.a[t][j];
    }
    ++t;
  }
  return SmithForm{std::move(D), std::move(U), std::move(V)};
}

}  // namespace rootpoly
