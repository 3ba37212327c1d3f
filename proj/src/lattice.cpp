#include "gl2lab/lattice.hpp"

#include <cmath>

#include "gl2lab/enumerate.hpp"

namespace gl2lab {

ArchPoint ArchPoint::base_point(const NumberField& F) {
  ArchPoint P;
  P.x.assign(F.num_arch_places(), {0.0, 0.0});
  P.y.assign(F.num_arch_places(), 1.0);
  return P;
}

std::vector<double> u_distance(const NumberField& F, const ArchPoint& P, const ArchPoint& Q) {
  std::vector<double> u(F.num_arch_places());
  for (int v = 0; v < F.num_arch_places(); ++v) {
    double dx2;
    if (F.arch_degree(v) == 1) {
      double d = P.x[v].real() - Q.x[v].real();
      dx2 = d * d;
    } else {
      dx2 = std::norm(P.x[v] - Q.x[v]);
    }
    double dy = P.y[v] - Q.y[v];
    u[v] = (dx2 + dy * dy) / (2.0 * P.y[v] * Q.y[v]);
  }
  return u;
}

ArchMatrix ArchMatrix::embed(const NumberField& F, const FieldElement& a, const FieldElement& b,
                             const FieldElement& c, const FieldElement& d) {
  ArchMatrix g;
  int r = F.num_arch_places();
  g.a.resize(r);
  g.b.resize(r);
  g.c.resize(r);
  g.d.resize(r);
  for (int v = 0; v < r; ++v) {
    auto cv = [&](const FieldElement& e) {
      CC z = e.embed(v);
      return std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    };
    g.a[v] = cv(a);
    g.b[v] = cv(b);
    g.c[v] = cv(c);
    g.d[v] = cv(d);
  }
  return g;
}

ArchPoint apply_matrix(const NumberField& F, const ArchMatrix& g, const ArchPoint& P) {
  ArchPoint out;
  int r = F.num_arch_places();
  out.x.resize(r);
  out.y.resize(r);
  for (int v = 0; v < r; ++v) {
    std::complex<double> a = g.a[v], b = g.b[v], c = g.c[v], d = g.d[v];
    if (F.arch_degree(v) == 1) {
      double det = (a * d - b * c).real();
      double x = P.x[v].real(), y = P.y[v];
      double ar = a.real(), br = b.real(), cr = c.real(), dr = d.real();
      if (det < 0) {
        // GL2(R) with negative determinant acts through x -> -x.
        x = -x;
        ar = -ar;
        cr = -cr;
        det = -det;
      }
      double den = (cr * x + dr) * (cr * x + dr) + cr * cr * y * y;
      out.x[v] = std::complex<double>(((ar * x + br) * (cr * x + dr) + ar * cr * y * y) / den, 0.0);
      out.y[v] = det * y / den;
    } else {
      std::complex<double> x = P.x[v];
      double y = P.y[v];
      double den = std::norm(c * x + d) + std::norm(c) * y * y;
      std::complex<double> num = (a * x + b) * std::conj(c * x + d) + a * std::conj(c) * y * y;
      out.x[v] = num / den;
      out.y[v] = std::abs(a * d - b * c) * y / den;
    }
  }
  return out;
}

Eigen::VectorXd embed_cP_plus_d(const NumberField& F, const ArchPoint& P, const FieldElement& c,
                                const FieldElement& d) {
  int dim = 2 * F.degree();
  Eigen::VectorXd out(dim);
  int col = 0;
  for (int v = 0; v < F.num_arch_places(); ++v) {
    CC cl = c.embed(v), dl = d.embed(v);
    std::complex<double> cv(static_cast<double>(cl.real()), static_cast<double>(cl.imag()));
    std::complex<double> dv(static_cast<double>(dl.real()), static_cast<double>(dl.imag()));
    if (F.arch_degree(v) == 1) {
      // C component: (c x + d) + (c y) i
      out[col++] = cv.real() * P.x[v].real() + dv.real();
      out[col++] = cv.real() * P.y[v];
    } else {
      // H component: (c x + d) + y (c j), with c j = Re(c) j + Im(c) k.
      std::complex<double> w = cv * P.x[v] + dv;
      out[col++] = w.real();
      out[col++] = w.imag();
      out[col++] = P.y[v] * cv.real();
      out[col++] = P.y[v] * cv.imag();
    }
  }
  return out;
}

EuclideanLattice::EuclideanLattice(const NumberField& F, const ArchPoint& P,
                                   const FractionalIdeal& c_ideal, const FractionalIdeal& d_ideal)
    : F_(&F), P_(P) {
  c_basis_ = c_ideal.basis_elements();
  d_basis_ = d_ideal.basis_elements();
  int n = F.degree();
  basis_.resize(2 * n, 2 * n);
  FieldElement zero = F.zero();
  for (int i = 0; i < n; ++i)
    basis_.row(i) = embed_cP_plus_d(F, P_, zero, d_basis_[i]);
  for (int i = 0; i < n; ++i)
    basis_.row(n + i) = embed_cP_plus_d(F, P_, c_basis_[i], zero);
}

double EuclideanLattice::covolume() const { return std::fabs(basis_.determinant()); }

std::pair<FieldElement, FieldElement> EuclideanLattice::cd_of_coeffs(
    const std::vector<long>& coeffs) const {
  int n = F_->degree();
  FieldElement c = F_->zero(), d = F_->zero();
  for (int i = 0; i < n; ++i) {
    if (coeffs[i]) d = d + d_basis_[i] * Rat(coeffs[i]);
    if (coeffs[n + i]) c = c + c_basis_[i] * Rat(coeffs[n + i]);
  }
  return {c, d};
}

std::vector<EuclideanLattice::PointData> EuclideanLattice::short_vectors(
    double radius2, std::uint64_t node_budget) const {
  Eigen::MatrixXd red = basis_;
  Eigen::MatrixXi U;
  lll_reduce(red, &U);
  Eigen::MatrixXd gram = red * red.transpose();
  int dim = static_cast<int>(basis_.rows());
  std::vector<PointData> out;
  fincke_pohst(gram, radius2, node_budget, [&](const std::vector<long>& x, double q) {
    PointData p;
    p.coeffs.assign(dim, 0);
    for (int i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim; ++j) p.coeffs[j] += x[i] * U(i, j);
    }
    p.norm2 = q;
    out.push_back(std::move(p));
  });
  return out;
}

long EuclideanLattice::count_in_ball(const Eigen::VectorXd& center, double R,
                                     std::uint64_t node_budget) const {
  Eigen::MatrixXd red = basis_;
  Eigen::MatrixXi U;
  lll_reduce(red, &U);
  Eigen::MatrixXd gram = red * red.transpose();
  // Solve tau * red = center in the row span (square, full rank).
  Eigen::VectorXd tau = red.transpose().colPivHouseholderQr().solve(center);
  long count = 0;
  fincke_pohst_shifted(gram, tau, R * R, node_budget,
                       [&](const std::vector<long>&, double) { ++count; });
  return count;
}

EuclideanLattice build_lattice(const NumberField& F, const ArchPoint& P) {
  return EuclideanLattice(F, P, F.ring_of_integers(), F.ring_of_integers());
}

MinimaProfile successive_minima(const EuclideanLattice& L, std::uint64_t node_budget) {
  int dim = L.dim();
  // Upper bound for all minima: largest basis vector after LLL.
  Eigen::MatrixXd red = L.basis();
  lll_reduce(red);
  double R2 = 0;
  for (int i = 0; i < dim; ++i) R2 = std::max(R2, red.row(i).squaredNorm());
  R2 *= 1.0 + 1e-9;
  auto pts = L.short_vectors(R2, node_budget);
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.norm2 < b.norm2; });
  MinimaProfile prof;
  // Greedy selection of independent vectors; independence checked exactly on
  // the integer coefficient vectors.
  ZMat chosen;
  for (const auto& p : pts) {
    if (static_cast<int>(prof.minima.size()) == dim) break;
    ZMat test = chosen;
    ZVec row(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) row[i] = p.coeffs[i];
    test.push_back(row);
    if (qmat_rank(qmat_of(test)) > chosen.size()) {
      chosen.push_back(row);
      prof.minima.push_back(std::sqrt(p.norm2));
      prof.attaining.push_back(p.coeffs);
    }
  }
  if (static_cast<int>(prof.minima.size()) != dim)
    throw BudgetExceeded("successive_minima: radius did not capture full rank");
  return prof;
}

long count_in_ball_boxscan(const EuclideanLattice& L, const Eigen::VectorXd& center, double R,
                           std::uint64_t budget) {
  // Coefficient bounds via the dual basis: |k_i| <= R * ||dual row|| + |tau_i|.
  Eigen::MatrixXd B = L.basis();
  Eigen::MatrixXd Binv = B.inverse();  // columns are dual vectors
  int dim = L.dim();
  Eigen::VectorXd tau = B.transpose().colPivHouseholderQr().solve(center);
  std::vector<long> lo(dim), hi(dim);
  double total = 1;
  for (int i = 0; i < dim; ++i) {
    double dual_norm = Binv.col(i).norm();
    lo[i] = static_cast<long>(std::floor(tau[i] - R * dual_norm - 1e-9));
    hi[i] = static_cast<long>(std::ceil(tau[i] + R * dual_norm + 1e-9));
    total *= (hi[i] - lo[i] + 1);
    if (total > static_cast<double>(budget)) throw BudgetExceeded("count_in_ball_boxscan");
  }
  std::vector<long> k(dim);
  long count = 0;
  const double R2 = R * R * (1 + 1e-9) + 1e-12;
  std::function<void(int)> rec = [&](int i) {
    if (i == dim) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
      for (int j = 0; j < dim; ++j) v += static_cast<double>(k[j]) * B.row(j).transpose();
      if ((v - center).squaredNorm() <= R2) ++count;
      return;
    }
    for (k[i] = lo[i]; k[i] <= hi[i]; ++k[i]) rec(i + 1);
  };
  rec(0);
  return count;
}

double unit_ball_volume(int d) {
  // V_d = pi^{d/2} / Gamma(d/2 + 1)
  return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double ring_covolume(const NumberField& F) {
  int n = F.degree();
  Eigen::MatrixXd B(n, n);
  auto belts = F.ring_of_integers().basis_elements();
  for (int i = 0; i < n; ++i) {
    int col = 0;
    for (int v = 0; v < F.num_arch_places(); ++v) {
      CC z = belts[i].embed(v);
      B(i, col++) = static_cast<double>(z.real());
      if (F.arch_degree(v) == 2) B(i, col++) = static_cast<double>(z.imag());
    }
  }
  return std::fabs(B.determinant());
}

Lemma5Row lemma5_row(const NumberField& F, const ArchPoint& P, const Rat& level_norm, double R,
                     const Eigen::VectorXd& center, std::uint64_t budget) {
  Lemma5Row row;
  int n = F.degree();
  EuclideanLattice L = build_lattice(F, P);
  double ymod = 1;
  for (int v = 0; v < F.num_arch_places(); ++v)
    ymod *= std::pow(P.y[v], F.arch_degree(v));
  row.y_mod = ymod;
  row.covol = L.covolume();
  double volo = ring_covolume(F);
  row.covol_identity = ymod * volo * volo;
  auto prof = successive_minima(L, budget);
  row.minima = prof.minima;
  double prod = 1;
  for (double m : prof.minima) prod *= m;
  double V = unit_ball_volume(2 * n);
  double pow22n = std::pow(2.0, 2 * n);
  double fact2n = std::tgamma(2 * n + 1.0);
  row.sandwich_lower_ok = (pow22n / fact2n) * row.covol <= prod * V * (1 + 1e-9);
  row.sandwich_upper_ok = prod * V <= pow22n * row.covol * (1 + 1e-9);
  row.cluster1 = prof.minima[n - 1] / prof.minima[0];
  row.cluster2 = prof.minima[2 * n - 1] / prof.minima[n];
  row.R = R;
  row.count = L.count_in_ball(center, R, budget);
  double nn = std::fabs(level_norm.get_d());
  double bound = 1.0 + std::pow(R, n) * std::sqrt(nn) + std::pow(R, 2 * n) / ymod;
  row.count_ratio = row.count / bound;
  return row;
}

}  // namespace gl2lab
