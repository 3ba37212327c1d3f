#pragma once

// The Euclidean model M = prod_real C x prod_complex H, the upper half-space
// H^2/H^3 products, the point-pair invariant u, and the rank-2n lattices
// {c P + d} with c, d running through fractional ideals. Successive minima
// and ball counts are computed by complete enumeration (LLL is used only to
// precondition the search).

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gl2lab/number_field.hpp"

namespace gl2lab {

// A point of the generalized upper half-space: per archimedean place v,
// x_v (real places use the real part only) and y_v > 0.
struct ArchPoint {
  std::vector<std::complex<double>> x;
  std::vector<double> y;

  int places() const { return static_cast<int>(y.size()); }
  static ArchPoint base_point(const NumberField& F);  // x = 0, y = 1 ("i")
};

// Per-place point-pair invariant u_v(P_v, Q_v) = ||P_v - Q_v||^2 / (2 y_P y_Q).
std::vector<double> u_distance(const NumberField& F, const ArchPoint& P, const ArchPoint& Q);

// Action of a 2x2 matrix with entries embedded at each archimedean place.
// Real places require positive determinant (guaranteed for totally positive
// determinants); complex places use the standard quaternion action.
struct ArchMatrix {
  // per place: entries a, b, c, d as complex numbers (real places: imag 0)
  std::vector<std::complex<double>> a, b, c, d;
  static ArchMatrix embed(const NumberField& F, const FieldElement& a, const FieldElement& b,
                          const FieldElement& c, const FieldElement& d);
};
ArchPoint apply_matrix(const NumberField& F, const ArchMatrix& g, const ArchPoint& P);

// Embedding of (c, d) |-> cP + d into R^{2n}; the column layout is, per real
// place (re, im) of the C component and per complex place (re, im, j, k) of
// the H component.
Eigen::VectorXd embed_cP_plus_d(const NumberField& F, const ArchPoint& P,
                                const FieldElement& c, const FieldElement& d);

class EuclideanLattice {
 public:
  // Lattice {cP + d : c in c_ideal, d in d_ideal}.
  EuclideanLattice(const NumberField& F, const ArchPoint& P, const FractionalIdeal& c_ideal,
                   const FractionalIdeal& d_ideal);

  const NumberField& field() const { return *F_; }
  const ArchPoint& point() const { return P_; }
  const Eigen::MatrixXd& basis() const { return basis_; }  // rows are basis vectors
  int dim() const { return static_cast<int>(basis_.rows()); }
  double covolume() const;

  // Recover the (c, d) pair from integer coefficients over the basis rows.
  std::pair<FieldElement, FieldElement> cd_of_coeffs(const std::vector<long>& coeffs) const;

  // All lattice vectors with norm^2 <= radius2 (one per +-pair, zero excluded).
  struct PointData {
    std::vector<long> coeffs;
    double norm2;
  };
  std::vector<PointData> short_vectors(double radius2, std::uint64_t node_budget = 1000000) const;

  // Count of lattice points in the closed ball of radius R around `center`
  // (an arbitrary vector of R^{2n}); includes the zero vector when in range.
  long count_in_ball(const Eigen::VectorXd& center, double R,
                     std::uint64_t node_budget = 1000000) const;

 private:
  const NumberField* F_;
  ArchPoint P_;
  std::vector<FieldElement> c_basis_, d_basis_;
  Eigen::MatrixXd basis_;
};

// Canonical Lambda(P) = {cP + d : c, d in o}.
EuclideanLattice build_lattice(const NumberField& F, const ArchPoint& P);

struct MinimaProfile {
  std::vector<double> minima;                 // m_1 <= ... <= m_{2n}
  std::vector<std::vector<long>> attaining;   // coefficient vectors
};

// Exact successive minima by complete enumeration below an adaptive radius.
MinimaProfile successive_minima(const EuclideanLattice& L, std::uint64_t node_budget = 4000000);

// Independent ball-count oracle: axis-aligned coefficient box scan with a
// direct norm test (no Fincke-Pohst pruning). For cross-checking only.
long count_in_ball_boxscan(const EuclideanLattice& L, const Eigen::VectorXd& center, double R,
                           std::uint64_t budget = 100000000);

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

// One row of the Lemma-5 style verification: exact covolume identity,
// Minkowski sandwich, minima clustering with the field constant, and the
// three-term count bound ratio.
struct Lemma5Row {
  double y_mod;            // |y|_infty
  double covol;            // lattice covolume
  double covol_identity;   // |y|_infty * vol(F_infty/o)^2
  std::vector<double> minima;
  bool sandwich_lower_ok, sandwich_upper_ok;
  double cluster1, cluster2;  // m_n/m_1 and m_{2n}/m_{n+1}
  double count_ratio;         // count / (1 + R^n sqrt(Nn) + R^{2n}/|y|)
  long count;
  double R;
};

Lemma5Row lemma5_row(const NumberField& F, const ArchPoint& P, const Rat& level_norm, double R,
                     const Eigen::VectorXd& center, std::uint64_t budget = 4000000);

// vol(F_infty / o): covolume of the ring of integers under the embedding
// into R^n (complex places split into re/im).
double ring_covolume(const NumberField& F);

}  // namespace gl2lab
