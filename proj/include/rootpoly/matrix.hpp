#pragma once

#include <optional>
#include <vector>

#include "rootpoly/numeric.hpp"

namespace rootpoly {

// Dense row-major rational matrix.
struct QMat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<QVec> a;  // rows

  QMat() = default;
  QMat(size_t r, size_t c) : rows(r), cols(c), a(r, QVec(c, Rat(0))) {}
  explicit QMat(std::vector<QVec> rws);

  Rat& at(size_t i, size_t j) { return a[i][j]; }
  const Rat& at(size_t i, size_t j) const { return a[i][j]; }

  static QMat identity(size_t n);
  QMat transposed() const;
};

// Dense integer matrix.
struct ZMat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<IVec> a;

  ZMat() = default;
  ZMat(size_t r, size_t c) : rows(r), cols(c), a(r, IVec(c, Int(0))) {}
  explicit ZMat(std::vector<IVec> rws);

  Int& at(size_t i, size_t j) { return a[i][j]; }
  const Int& at(size_t i, size_t j) const { return a[i][j]; }

  static ZMat identity(size_t n);
  ZMat transposed() const;
  QMat to_rational() const;

  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

ZMat mul(const ZMat& A, const ZMat& B);
QMat mul(const QMat& A, const QMat& B);
QVec mul(const QMat& A, const QVec& x);
IVec mul(const ZMat& A, const IVec& x);

size_t rank(QMat A);

// Unique solution of A x = b. Returns nullopt when the system is singular,
// underdetermined, or inconsistent.
std::optional<QVec> solve_rational(const QMat& A, const QVec& b);

// Basis of the right kernel {x : A x = 0}, as rows.
std::vector<QVec> nullspace(const QMat& A);

// Inverse of a nonsingular square matrix; nullopt when singular.
std::optional<QMat> inverse(const QMat& A);

Rat determinant(QMat A);
Int determinant(const ZMat& A);

// U*A*V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  ZMat D, U, V;
};

SmithForm smith_normal_form(const ZMat& A);

}  // namespace rootpoly
