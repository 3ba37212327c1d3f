#pragma once

// Exact linear algebra over Z and Q, backed by GMP. Everything here is
// desk-scale: matrices are at most ~20x20, so plain fraction arithmetic
// and textbook algorithms are fine.

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

namespace gl2lab {

using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;
using QMat = std::vector<std::vector<Rat>>;  // row major
using ZMat = std::vector<std::vector<Int>>;  // row major

inline QMat qmat_zero(std::size_t r, std::size_t c) {
  return QMat(r, QVec(c, Rat(0)));
}
inline QMat qmat_identity(std::size_t n) {
  QMat m = qmat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}
inline ZMat zmat_zero(std::size_t r, std::size_t c) {
  return ZMat(r, ZVec(c, Int(0)));
}
inline ZMat zmat_identity(std::size_t n) {
  ZMat m = zmat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& x);  // a * x (column vector)
Rat qmat_det(QMat a);                           // Gaussian elimination
QMat qmat_inverse(const QMat& a);               // throws std::runtime_error if singular
// Solve a * x = b; returns empty vector if singular.
QVec qmat_solve(QMat a, QVec b);
std::size_t qmat_rank(QMat a);

inline ZMat zmat_of(const QMat& a, Int& den) {
  // Common-denominatorize a rational matrix: a == result / den.
  den = 1;
  for (auto& row : a)
    for (auto& x : row) {
      Int d = x.get_den();
      den = lcm(den, d);
    }
  ZMat out(a.size(), ZVec(a.empty() ? 0 : a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      Rat v = a[i][j] * Rat(den);
      assert(v.get_den() == 1);
      out[i][j] = v.get_num();
    }
  return out;
}

inline QMat qmat_of(const ZMat& a, const Int& den = Int(1)) {
  QMat out(a.size(), QVec(a.empty() ? 0 : a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = Rat(a[i][j], den);
  return out;
}

// Row-style Hermite normal form of the lattice spanned by the rows of `a`.
// Returns the nonzero rows, in row echelon shape with positive pivots and
// entries above each pivot reduced into [0, pivot).
ZMat hnf_rows(ZMat a);

// Basis of { x in Z^n : a * x = 0 } (right kernel), rows of the result.
ZMat z_right_kernel(const ZMat& a);

// Determinant of a square integer matrix (exact, via rational elimination).
Int zmat_det(const ZMat& a);

// One integral solution x of a * x = b, if any (a need not be square).
bool z_solve(const ZMat& a, const ZVec& b, ZVec& x);

std::string qvec_str(const QVec& v);

}  // namespace gl2lab
