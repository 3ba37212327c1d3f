#include "gl2lab/iwasawa.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "gl2lab/enumerate.hpp"

namespace gl2lab {

namespace {
constexpr long kValInf = std::numeric_limits<long>::max() / 4;
}

ArchIwasawa arch_iwasawa(const std::array<std::complex<double>, 4>& m, bool complex_place) {
  const std::complex<double> a = m[0], b = m[1], c = m[2], d = m[3];
  std::complex<double> det = a * d - b * c;
  double r2 = std::norm(c) + std::norm(d);
  if (std::abs(det) == 0.0 || r2 == 0.0)
    throw std::runtime_error("arch_iwasawa: singular matrix");
  double r = std::sqrt(r2);
  ArchIwasawa out;
  out.y = std::abs(det) / r2;
  out.x = (a * std::conj(c) + b * std::conj(d)) / r2;
  if (!complex_place) out.x = {out.x.real(), 0.0};
  // k = n(x) a(y)^{-1} m, adjusted so that the decomposition uses the
  // positive y: k = [[1/y, -x/y],[0,1]] * m.
  std::complex<double> y(out.y, 0.0);
  out.k = {(a - out.x * c) / y, (b - out.x * d) / y, c, d};
  return out;
}

double arch_recomposition_error(const std::array<std::complex<double>, 4>& m, bool complex_place,
                                const ArchIwasawa& dec) {
  // n(x) a(y) k
  std::complex<double> y(dec.y, 0.0);
  std::array<std::complex<double>, 4> rec = {y * dec.k[0] + dec.x * dec.k[2],
                                             y * dec.k[1] + dec.x * dec.k[3], dec.k[2], dec.k[3]};
  double err = 0;
  for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(rec[i] - m[i]));
  // k must be a scalar multiple of an orthogonal/unitary matrix: rows of equal
  // norm, orthogonal.
  std::complex<double> inner = dec.k[0] * std::conj(dec.k[2]) + dec.k[1] * std::conj(dec.k[3]);
  double n1 = std::norm(dec.k[0]) + std::norm(dec.k[1]);
  double n2 = std::norm(dec.k[2]) + std::norm(dec.k[3]);
  double scale = std::max(1.0, std::max(n1, n2));
  err = std::max(err, std::abs(inner) / scale);
  err = std::max(err, std::fabs(n1 - n2) / scale);
  if (!complex_place) {
    for (int i = 0; i < 4; ++i) err = std::max(err, std::fabs(dec.k[i].imag()));
  }
  return err;
}

NonarchIwasawa nonarch_iwasawa_vals(long va, long vb, long vc, long vd, long vdet,
                                    bool divides_level) {
  (void)va;
  (void)vb;
  NonarchIwasawa out;
  long vgcd = std::min(vc, vd);
  bool c_smaller = vc > vd;  // |c|_v < |d|_v means v(c) > v(d)
  if (c_smaller || !divides_level) {
    out.val_y = static_cast<int>(vdet - 2 * vgcd);
    out.atkin_lehner = false;
  } else {
    out.val_y = static_cast<int>(1 + vdet - 2 * vgcd);
    out.atkin_lehner = true;
  }
  return out;
}

NonarchIwasawa nonarch_iwasawa(const NumberField& F, const std::array<FieldElement, 4>& m,
                               const PrimeIdeal& P, bool divides_level) {
  auto val = [&](const FieldElement& x) -> long {
    if (x.is_zero()) return kValInf;
    return F.valuation(x, P);
  };
  FieldElement det = m[0] * m[3] - m[1] * m[2];
  if (det.is_zero()) throw FieldError("nonarch_iwasawa: singular matrix");
  return nonarch_iwasawa_vals(val(m[0]), val(m[1]), val(m[2]), val(m[3]), val(det),
                              divides_level);
}

double height(const NumberField& F, const AdelicShape& g, const FractionalIdeal& level) {
  // Archimedean part: decompose gamma_v * n(x_v) a(y_v).
  long double log_arch = 0;
  for (int v = 0; v < F.num_arch_places(); ++v) {
    auto cv = [&](const FieldElement& e) {
      CC z = e.embed(v);
      return std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    };
    std::complex<double> yv(g.arch.y[v], 0.0), xv = g.arch.x[v];
    std::array<std::complex<double>, 4> mv = {cv(g.gamma[0]) * yv, cv(g.gamma[0]) * xv + cv(g.gamma[1]),
                                              cv(g.gamma[2]) * yv, cv(g.gamma[2]) * xv + cv(g.gamma[3])};
    ArchIwasawa dec = arch_iwasawa(mv, F.arch_degree(v) == 2);
    log_arch += F.arch_degree(v) * std::log(static_cast<long double>(dec.y));
  }
  // Finite part: gamma * diag(theta_i, 1); support primes divide entries,
  // determinant, theta_i, or the level.
  const FractionalIdeal& theta = F.class_representatives()[g.class_index];
  FieldElement det = g.gamma[0] * g.gamma[3] - g.gamma[1] * g.gamma[2];
  Rat support = abs(det.norm()) * theta.norm() * level.norm();
  for (const auto& e : g.gamma)
    if (!e.is_zero()) support *= abs(e.norm());
  Int supp_int = support.get_num() * support.get_den();
  Rat finite_part = 1;
  std::set<Int> seen;
  for (Int p = 2; p * p <= supp_int || supp_int % p == 0;
       mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (supp_int % p != 0) continue;
    while (supp_int % p == 0) supp_int /= p;
    for (const auto& P : F.primes_above(p)) {
      bool div_level = F.valuation(level, P) > 0;
      long vtheta = F.valuation(theta, P);
      auto val = [&](const FieldElement& x) -> long {
        if (x.is_zero()) return kValInf;
        return F.valuation(x, P);
      };
      // matrix at p: (a*theta, b; c*theta, d)
      NonarchIwasawa dec = nonarch_iwasawa_vals(
          val(g.gamma[0]) + vtheta, val(g.gamma[1]), val(g.gamma[2]) + vtheta, val(g.gamma[3]),
          val(det) + vtheta, div_level);
      Rat np(P.norm);
      for (int i = 0; i < std::abs(dec.val_y); ++i) {
        if (dec.val_y > 0)
          finite_part /= np;
        else
          finite_part *= np;
      }
    }
  }
  if (supp_int > 1) throw FieldError("height: support factorization incomplete");
  return static_cast<double>(std::exp(log_arch)) * finite_part.get_d();
}

SpecialRep reduce_to_special(const NumberField& F, const ArchPoint& P, int class_index,
                             const FractionalIdeal& level, std::uint64_t node_budget) {
  const FractionalIdeal& theta = F.class_representatives()[class_index];
  FractionalIdeal c_ideal = theta.inverse() * level;
  EuclideanLattice L(F, P, c_ideal, F.ring_of_integers());

  const int r = F.num_arch_places();
  // Q(c, d) = prod_v ||c_v P_v + d_v||^{2 deg_v}; the identity row (0,1) has
  // Q = 1, and any improving row can be unit-balanced into the ball below.
  double C = std::exp(F.log_unit_covering()) * (1 + 1e-9);
  double radius2 = r * C * C * (1 + 1e-9);
  auto pts = L.short_vectors(radius2, node_budget);

  auto Q_of = [&](const FieldElement& c, const FieldElement& d) {
    long double q = 1;
    for (int v = 0; v < r; ++v) {
      CC cl = c.embed(v), dl = d.embed(v);
      std::complex<double> cv(static_cast<double>(cl.real()), static_cast<double>(cl.imag()));
      std::complex<double> dv(static_cast<double>(dl.real()), static_cast<double>(dl.imag()));
      double n2;
      if (F.arch_degree(v) == 1) {
        double t = cv.real() * P.x[v].real() + dv.real();
        double s = cv.real() * P.y[v];
        n2 = t * t + s * s;
      } else {
        std::complex<double> w = cv * P.x[v] + dv;
        n2 = std::norm(w) + std::norm(cv) * P.y[v] * P.y[v];
      }
      q *= std::pow(static_cast<long double>(n2), F.arch_degree(v));
    }
    return static_cast<double>(q);
  };

  auto completable = [&](const FieldElement& c, const FieldElement& d) {
    if (c.is_zero() && d.is_zero()) return false;
    if (c.is_zero()) return F.is_unit(d);
    if (d.is_zero()) {
      FractionalIdeal ct = F.principal_ideal(c) * theta;
      return ct == F.ring_of_integers();
    }
    FractionalIdeal row = F.principal_ideal(d) + F.principal_ideal(c) * theta;
    return row == F.ring_of_integers();
  };

  FieldElement best_c = F.zero(), best_d = F.one();
  double bestQ = 1.0;
  for (const auto& p : pts) {
    auto [c, d] = L.cd_of_coeffs(p.coeffs);
    // Both signs give the same row up to the unit -1; test once.
    if (!completable(c, d)) continue;
    double q = Q_of(c, d);
    if (q < bestQ * (1 - 1e-9)) {
      bestQ = q;
      best_c = c;
      best_d = d;
    } else if (q < bestQ * (1 + 1e-9)) {
      // tie: lexicographically smallest (c, d)
      if (std::pair(c, d) < std::pair(best_c, best_d)) {
        best_c = c;
        best_d = d;
      }
    }
  }

  // Complete (best_c, best_d) to a matrix with a in o, b in theta*o and
  // det = 1: a*d - b*c = 1.
  SpecialRep rep;
  rep.class_index = class_index;
  std::array<FieldElement, 4> gamma = {F.one(), F.zero(), F.zero(), F.one()};
  if (!(best_c.is_zero() && best_d == F.one())) {
    // Solve over the Z-lattice spanned by {d*u_j} and {-c*t_j}.
    auto obasis = F.ring_of_integers().basis_elements();
    auto tbasis = theta.basis_elements();
    const int n = F.degree();
    ZMat M;
    Int den = 1;
    std::vector<FieldElement> gens;
    for (int j = 0; j < n; ++j) gens.push_back(obasis[j] * best_d);
    for (int j = 0; j < n; ++j) gens.push_back(-(tbasis[j] * best_c));
    for (const auto& g : gens)
      for (const auto& coord : g.coords()) den = lcm(den, Int(coord.get_den()));
    M.assign(F.degree(), ZVec(2 * n, Int(0)));
    for (int col = 0; col < 2 * n; ++col)
      for (int row = 0; row < n; ++row) {
        Rat v = gens[col].coords()[row] * Rat(den);
        M[row][col] = v.get_num();
      }
    ZVec target(n, Int(0));
    {
      QVec onec = F.one().coords();
      for (int row = 0; row < n; ++row) {
        Rat v = onec[row] * Rat(den);
        assert(v.get_den() == 1);
        target[row] = v.get_num();
      }
    }
    ZVec sol;
    if (!z_solve(M, target, sol))
      throw FieldError("reduce_to_special: row completion failed");
    FieldElement a = F.zero(), b = F.zero();
    for (int j = 0; j < n; ++j) {
      if (sol[j] != 0) a = a + obasis[j] * Rat(sol[j]);
      if (sol[n + j] != 0) b = b + tbasis[j] * Rat(sol[n + j]);
    }
    gamma = {a, b, best_c, best_d};
  }

  ArchPoint Pg = apply_matrix(F, ArchMatrix::embed(F, gamma[0], gamma[1], gamma[2], gamma[3]), P);

  // Unit-balance y via left multiplication by diag(u, 1), working on the
  // log vector directly.
  FieldElement u = F.one();
  if (!F.fundamental_units().empty()) {
    const FieldElement& eps = F.fundamental_units()[0];
    long double logmod = 0;
    for (int v = 0; v < r; ++v) logmod += F.arch_degree(v) * std::log((long double)Pg.y[v]);
    auto cost = [&](long k) {
      long double m = 0;
      for (int v = 0; v < r; ++v) {
        long double t = std::log((long double)Pg.y[v]) +
                        k * std::log(eps.abs_embed(v)) - logmod / F.degree();
        m = std::max(m, (long double)std::fabs((double)t));
      }
      return m;
    };
    long best_k = 0;
    long double best = cost(0);
    for (long k = -8; k <= 8; ++k)
      if (cost(k) < best - 1e-15) {
        best = cost(k);
        best_k = k;
      }
    u = eps.pow(best_k);
  }
  gamma = {u * gamma[0], u * gamma[1], gamma[2], gamma[3]};
  Pg = apply_matrix(F, ArchMatrix::embed(F, gamma[0], gamma[1], gamma[2], gamma[3]), P);

  // Reduce x into the fundamental parallelotope of theta_i * o: subtract the
  // nearest lattice translate s (entering via n(s) on the left).
  {
    auto tbasis = theta.basis_elements();
    const int n = F.degree();
    Eigen::MatrixXd B(n, n);
    Eigen::VectorXd xv(n);
    for (int j = 0; j < n; ++j) {
      int col = 0;
      for (int v = 0; v < r; ++v) {
        CC z = tbasis[j].embed(v);
        B(j, col++) = static_cast<double>(z.real());
        if (F.arch_degree(v) == 2) B(j, col++) = static_cast<double>(z.imag());
      }
    }
    int col = 0;
    for (int v = 0; v < r; ++v) {
      xv(col++) = Pg.x[v].real();
      if (F.arch_degree(v) == 2) xv(col++) = Pg.x[v].imag();
    }
    Eigen::VectorXd coeff = B.transpose().colPivHouseholderQr().solve(xv);
    FieldElement s = F.zero();
    for (int j = 0; j < n; ++j) {
      long kj = std::lround(coeff(j));
      if (kj != 0) s = s + tbasis[j] * Rat(kj);
    }
    if (!s.is_zero()) {
      for (int v = 0; v < r; ++v) {
        CC z = s.embed(v);
        Pg.x[v] -= std::complex<double>(static_cast<double>(z.real()),
                                        static_cast<double>(z.imag()));
        if (F.arch_degree(v) == 1) Pg.x[v] = {Pg.x[v].real(), 0.0};
      }
      gamma = {gamma[0] - s * gamma[2], gamma[1] - s * gamma[3], gamma[2], gamma[3]};
    }
  }

  rep.point = Pg;
  rep.gamma = gamma;
  double ymod = 1;
  for (int v = 0; v < r; ++v) ymod *= std::pow(Pg.y[v], F.arch_degree(v));
  rep.y_mod = ymod;
  // The search stays inside the plain coset at every p | n.
  for (const auto& [Pp, e] : F.factor_ideal(level)) {
    (void)Pp;
    (void)e;
    rep.atkin_lehner_signs.push_back(+1);
  }
  return rep;
}

}  // namespace gl2lab
