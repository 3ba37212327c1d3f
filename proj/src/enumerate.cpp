#include "gl2lab/enumerate.hpp"

#include <cmath>
#include <stdexcept>

#include "gl2lab/number_field.hpp"  // BudgetExceeded

namespace gl2lab {

std::size_t fincke_pohst(const Eigen::MatrixXd& gram, double radius2,
                         std::uint64_t node_budget,
                         const std::function<void(const std::vector<long>&, double)>& visit) {
  const int n = static_cast<int>(gram.rows());
  if (radius2 < 0) return 0;
  // Cholesky: gram = R^T R with R upper triangular.
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("fincke_pohst: Gram matrix not positive definite");
  Eigen::MatrixXd R = llt.matrixU();

  // Q(x) = sum_i r_ii^2 (x_i + sum_{j>i} mu_ij x_j)^2 with mu_ij = r_ij/r_ii.
  std::vector<double> rdiag2(n);
  Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    rdiag2[i] = R(i, i) * R(i, i);
    for (int j = i + 1; j < n; ++j) mu(i, j) = R(i, j) / R(i, i);
  }

  std::vector<long> x(n, 0);
  std::vector<double> center(n, 0.0), partial(n + 1, 0.0);
  std::size_t count = 0;
  std::uint64_t nodes = 0;
  const double fuzz = 1e-9 * (1.0 + radius2);

  // Iterative depth-first walk from coordinate n-1 down to 0.
  int level = n - 1;
  std::vector<long> lo(n), hi(n);
  auto compute_range = [&](int i) {
    // remaining budget at level i
    double rem = radius2 + fuzz - partial[i + 1];
    if (rem < 0) {
      lo[i] = 1;
      hi[i] = 0;
      return;
    }
    double c = 0.0;
    for (int j = i + 1; j < n; ++j) c += mu(i, j) * x[j];
    center[i] = c;
    double half = std::sqrt(rem / rdiag2[i]);
    lo[i] = static_cast<long>(std::ceil(-c - half - 1e-12));
    hi[i] = static_cast<long>(std::floor(-c + half + 1e-12));
    x[i] = lo[i] - 1;
  };
  compute_range(level);
  while (true) {
    if (++nodes > node_budget) throw BudgetExceeded("fincke_pohst: node budget exceeded");
    ++x[level];
    if (x[level] > hi[level]) {
      ++level;
      if (level >= n) break;
      continue;
    }
    double t = x[level] + center[level];
    partial[level] = partial[level + 1] + rdiag2[level] * t * t;
    if (partial[level] > radius2 + fuzz) continue;
    if (level == 0) {
      bool zero = true;
      for (int i = 0; i < n && zero; ++i) zero = (x[i] == 0);
      if (zero) continue;
      // Report one of {x, -x}: first nonzero coordinate positive.
      int k = 0;
      while (x[k] == 0) ++k;
      if (x[k] < 0) continue;
      ++count;
      visit(x, partial[0]);
    } else {
      --level;
      compute_range(level);
    }
  }
  return count;
}

std::size_t fincke_pohst_shifted(const Eigen::MatrixXd& gram, const Eigen::VectorXd& tau,
                                 double radius2, std::uint64_t node_budget,
                                 const std::function<void(const std::vector<long>&, double)>& visit) {
  const int n = static_cast<int>(gram.rows());
  if (radius2 < 0) return 0;
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("fincke_pohst_shifted: Gram matrix not positive definite");
  Eigen::MatrixXd R = llt.matrixU();
  std::vector<double> rdiag2(n);
  Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    rdiag2[i] = R(i, i) * R(i, i);
    for (int j = i + 1; j < n; ++j) mu(i, j) = R(i, j) / R(i, i);
  }
  std::vector<long> x(n, 0);
  std::vector<double> center(n, 0.0), partial(n + 1, 0.0);
  std::vector<long> lo(n), hi(n);
  std::size_t count = 0;
  std::uint64_t nodes = 0;
  const double fuzz = 1e-9 * (1.0 + radius2);
  int level = n - 1;
  auto compute_range = [&](int i) {
    double rem = radius2 + fuzz - partial[i + 1];
    if (rem < 0) {
      lo[i] = 1;
      hi[i] = 0;
      return;
    }
    double c = -tau[i];
    for (int j = i + 1; j < n; ++j) c += mu(i, j) * (x[j] - tau[j]);
    center[i] = c;
    double half = std::sqrt(rem / rdiag2[i]);
    lo[i] = static_cast<long>(std::ceil(-c - half - 1e-12));
    hi[i] = static_cast<long>(std::floor(-c + half + 1e-12));
    x[i] = lo[i] - 1;
  };
  compute_range(level);
  while (true) {
    if (++nodes > node_budget)
      throw BudgetExceeded("fincke_pohst_shifted: node budget exceeded");
    ++x[level];
    if (x[level] > hi[level]) {
      ++level;
      if (level >= n) break;
      continue;
    }
    double t = x[level] + center[level];
    partial[level] = partial[level + 1] + rdiag2[level] * t * t;
    if (partial[level] > radius2 + fuzz) continue;
    if (level == 0) {
      ++count;
      visit(x, partial[0]);
    } else {
      --level;
      compute_range(level);
    }
  }
  return count;
}

Eigen::MatrixXd lll_reduce(Eigen::MatrixXd& basis, Eigen::MatrixXi* transform) {
  const int n = static_cast<int>(basis.rows());
  Eigen::MatrixXi U = Eigen::MatrixXi::Identity(n, n);
  const double delta = 0.99;

  auto gso = [&](Eigen::MatrixXd& bstar, Eigen::MatrixXd& mu) {
    bstar = basis;
    mu = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        double denom = bstar.row(j).squaredNorm();
        mu(i, j) = basis.row(i).dot(bstar.row(j)) / denom;
        bstar.row(i) -= mu(i, j) * bstar.row(j);
      }
    }
  };

  Eigen::MatrixXd bstar, mu;
  gso(bstar, mu);
  int k = 1;
  int guard = 10000 * n * n;
  while (k < n && guard-- > 0) {
    for (int j = k - 1; j >= 0; --j) {
      long q = std::lround(mu(k, j));
      if (q != 0) {
        basis.row(k) -= static_cast<double>(q) * basis.row(j);
        U.row(k) -= static_cast<int>(q) * U.row(j);
        gso(bstar, mu);
      }
    }
    double lhs = bstar.row(k).squaredNorm();
    double rhs = (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar.row(k - 1).squaredNorm();
    if (lhs >= rhs) {
      ++k;
    } else {
      basis.row(k).swap(basis.row(k - 1));
      U.row(k).swap(U.row(k - 1));
      gso(bstar, mu);
      k = std::max(k - 1, 1);
    }
  }
  if (transform) *transform = U;
  return basis;
}

}  // namespace gl2lab
