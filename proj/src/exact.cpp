#include "gl2lab/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace gl2lab {

QMat qmat_mul(const QMat& a, const QMat& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  QMat out = qmat_zero(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

QVec qmat_apply(const QMat& a, const QVec& x) {
  QVec out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

Rat qmat_det(QMat a) {
  std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::size_t qmat_rank(QMat a) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

QMat qmat_inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat work = a, inv = qmat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("qmat_inverse: singular matrix");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rat f = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

QVec qmat_solve(QMat a, QVec b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

ZMat hnf_rows(ZMat a) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;  // current pivot row
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Clear column c below row r by gcd steps.
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (a[r][c] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                 a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      Int p = a[r][c] / g, q = a[i][c] / g;
      for (std::size_t j = 0; j < cols; ++j) {
        Int x = a[r][j], y = a[i][j];
        a[r][j] = u * x + v * y;
        a[i][j] = -q * x + p * y;
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

ZMat z_right_kernel(const ZMat& a) {
  // Column-style HNF with transformation: find unimodular U with A*U in
  // column echelon form; columns of U mapping to zero give the kernel.
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  ZMat w = a;                    // rows x cols, transformed in place
  ZMat u = zmat_identity(cols);  // cols x cols, tracks column ops (u acts on columns)
  auto colswap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r0 = 0; r0 < rows; ++r0) std::swap(w[r0][i], w[r0][j]);
    for (std::size_t r0 = 0; r0 < cols; ++r0) std::swap(u[r0][i], u[r0][j]);
  };
  std::size_t c = 0;
  for (std::size_t r0 = 0; r0 < rows && c < cols; ++r0) {
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (w[r0][j] == 0) continue;
      if (w[r0][c] == 0) {
        colswap(c, j);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 w[r0][c].get_mpz_t(), w[r0][j].get_mpz_t());
      Int p = w[r0][c] / g, q = w[r0][j] / g;
      for (std::size_t i = 0; i < rows; ++i) {
        Int x = w[i][c], y = w[i][j];
        w[i][c] = s * x + t * y;
        w[i][j] = -q * x + p * y;
      }
      for (std::size_t i = 0; i < cols; ++i) {
        Int x = u[i][c], y = u[i][j];
        u[i][c] = s * x + t * y;
        u[i][j] = -q * x + p * y;
      }
    }
    if (w[r0][c] != 0) ++c;
  }
  // Columns c..cols-1 of w are zero on all pivot rows; verify fully zero and
  // emit the corresponding columns of u as kernel vectors.
  ZMat kernel;
  for (std::size_t j = c; j < cols; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < rows && zero; ++i) zero = (w[i][j] == 0);
    if (!zero) continue;
    ZVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Int zmat_det(const ZMat& a) {
  Rat d = qmat_det(qmat_of(a));
  assert(d.get_den() == 1);
  return d.get_num();
}

bool z_solve(const ZMat& a, const ZVec& b, ZVec& x) {
  // Column HNF with transform: a * U = H column-echelon; solve H w = b by
  // forward substitution with integrality checks, then x = U w.
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  ZMat w = a;
  ZMat u = zmat_identity(cols);
  auto colswap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r0 = 0; r0 < rows; ++r0) std::swap(w[r0][i], w[r0][j]);
    for (std::size_t r0 = 0; r0 < cols; ++r0) std::swap(u[r0][i], u[r0][j]);
  };
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t c = 0;
  for (std::size_t r0 = 0; r0 < rows && c < cols; ++r0) {
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (w[r0][j] == 0) continue;
      if (w[r0][c] == 0) {
        colswap(c, j);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 w[r0][c].get_mpz_t(), w[r0][j].get_mpz_t());
      Int p = w[r0][c] / g, q = w[r0][j] / g;
      for (std::size_t i = 0; i < rows; ++i) {
        Int xx = w[i][c], yy = w[i][j];
        w[i][c] = s * xx + t * yy;
        w[i][j] = -q * xx + p * yy;
      }
      for (std::size_t i = 0; i < cols; ++i) {
        Int xx = u[i][c], yy = u[i][j];
        u[i][c] = s * xx + t * yy;
        u[i][j] = -q * xx + p * yy;
      }
    }
    if (w[r0][c] != 0) {
      pivots.emplace_back(r0, c);
      ++c;
    }
  }
  ZVec sol(cols, Int(0));
  ZVec residual = b;
  for (auto [pr, pc] : pivots) {
    Int q = residual[pr] / w[pr][pc];
    if (q * w[pr][pc] != residual[pr]) return false;
    sol[pc] = q;
    for (std::size_t i = 0; i < rows; ++i) residual[i] -= q * w[i][pc];
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (residual[i] != 0) return false;
  x.assign(cols, Int(0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) x[i] += u[i][j] * sol[j];
  return true;
}

std::string qvec_str(const QVec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace gl2lab
