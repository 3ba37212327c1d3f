#pragma once

// Exact arithmetic in a fixed number field of degree <= 4: elements over an
// integral basis, fractional ideals in Hermite form, archimedean embeddings,
// units, class group data, and prime ideals.
//
// Design constraints (deliberate, desk-scale):
//  * degree capped at 4;
//  * integral basis is the power basis when Z[alpha] is maximal (checked by
//    Dedekind's criterion at every squared prime of disc(f)), otherwise a
//    user-supplied basis is required;
//  * unit rank must be 0 or 1;
//  * prime ideal machinery only at primes not dividing the index.

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2lab/exact.hpp"
#include "gl2lab/poly.hpp"

namespace gl2lab {

class NumberField;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CC = std::complex<long double>;

// Element written over the integral basis with exact rational coordinates.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const NumberField* field, QVec coords)
      : F_(field), coords_(std::move(coords)) {}

  const NumberField& field() const { return *F_; }
  const QVec& coords() const { return coords_; }
  bool is_zero() const {
    for (const auto& x : coords_)
      if (x != 0) return false;
    return true;
  }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const { return coords_ == o.coords_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;  // coordinate-lexicographic

  FieldElement pow(long k) const;  // k may be negative

  Rat norm() const;   // N_{F/Q}
  Rat trace() const;  // Tr_{F/Q}
  bool is_integral() const;
  bool is_rational() const;
  Rat as_rational() const;  // requires is_rational()

  CC embed(int arch_place) const;       // image at the v-th archimedean place
  long double abs_embed(int v) const;   // |x_v| (plain absolute value)
  double module(int v) const;           // |x|_v = |x_v|^{[F_v:R]}
  double module_infty() const;          // prod over arch places

  std::string str() const;

 private:
  const NumberField* F_ = nullptr;
  QVec coords_;
};

// Fractional ideal: (1/den) * (integral ideal in row HNF over the integral
// basis). The HNF matrix is n x n, full rank.
class FractionalIdeal {
 public:
  FractionalIdeal() = default;
  FractionalIdeal(const NumberField* F, ZMat hnf, Int den);

  const NumberField& field() const { return *F_; }
  const ZMat& hnf_basis() const { return hnf_; }
  const Int& denominator() const { return den_; }

  Rat norm() const;
  bool is_integral() const { return den_ == 1; }
  bool contains(const FieldElement& x) const;
  bool contains(const FractionalIdeal& other) const;  // other subset of *this
  bool operator==(const FractionalIdeal& o) const;

  FractionalIdeal operator*(const FractionalIdeal& o) const;
  FractionalIdeal operator+(const FractionalIdeal& o) const;  // ideal gcd
  FractionalIdeal intersect(const FractionalIdeal& o) const;  // ideal lcm
  FractionalIdeal inverse() const;
  FractionalIdeal pow(long k) const;
  FractionalIdeal scale(const FieldElement& x) const;  // x * ideal

  // Z-basis of the ideal as field elements.
  std::vector<FieldElement> basis_elements() const;

  std::string str() const;

 private:
  const NumberField* F_ = nullptr;
  ZMat hnf_;
  Int den_ = 1;
  void normalize();
};

struct PrimeIdeal {
  FractionalIdeal ideal;
  Int p;             // rational prime below
  int e = 1;         // ramification index
  int f = 1;         // residue degree
  FpPoly gbar;       // irreducible factor of the defining polynomial mod p
  FieldElement uniformizer;  // element of valuation exactly 1
  Int norm;          // p^f

  bool operator==(const PrimeIdeal& o) const { return ideal == o.ideal; }
};

struct Place {
  enum class Kind { real, complex, finite };
  Kind kind = Kind::real;
  int arch_index = -1;   // for archimedean places
  PrimeIdeal prime;      // for finite places
  int local_degree() const { return kind == Kind::complex ? 2 : 1; }
};

// Residue field F_q = o/p for a prime not dividing the index.
class ResidueField {
 public:
  ResidueField(const NumberField* F, const PrimeIdeal& P);
  // Reduce an element integral at p (denominator coprime to p).
  FpPoly reduce(const FieldElement& x) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly pow(FpPoly a, Int e) const;
  bool is_zero(const FpPoly& a) const { return a.empty(); }
  bool is_square(const FpPoly& a) const;  // nonzero a; q odd
  Int q() const { return q_; }

 private:
  const NumberField* F_;
  std::uint64_t p_;
  FpPoly g_;
  Int q_;
};

struct SubfieldInfo {
  std::shared_ptr<const NumberField> K;  // the maximal totally real subfield
  FieldElement generator_in_F;           // primitive element of K inside F
  int m = 1;                             // [F:K]
};

class NumberField {
 public:
  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

  // Throws FieldError on: non-monic/reducible polynomial, degree > 4,
  // non-monogenic field without a supplied basis, unit rank >= 2.
  static std::shared_ptr<const NumberField> make(const std::vector<Int>& monic_poly);
  static std::shared_ptr<const NumberField> make(const std::vector<Int>& monic_poly,
                                                 const QMat& integral_basis);

  int degree() const { return n_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  int num_arch_places() const { return r1_ + r2_; }
  int arch_degree(int v) const { return v < r1_ ? 1 : 2; }
  const Int& discriminant() const { return disc_; }
  const std::vector<Int>& defining_polynomial() const { return poly_; }
  const QMat& integral_basis_coords() const { return basis_; }  // rows over power basis

  // Elements.
  FieldElement element(QVec coords) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rat& r) const;
  FieldElement generator() const;  // alpha, the root of the defining polynomial
  FieldElement from_power_basis(const QVec& power_coords) const;
  QVec basis_to_power(const QVec& basis_coords) const;

  // Embeddings: root of the defining polynomial at archimedean place v.
  CC arch_root(int v) const { return arch_roots_[v]; }
  // All n embeddings F -> C (real roots, then both members of each
  // conjugate pair).
  std::vector<CC> all_roots() const {
    std::vector<CC> out;
    for (int v = 0; v < r1_; ++v) out.push_back(arch_roots_[v]);
    for (int v = r1_; v < r1_ + r2_; ++v) {
      out.push_back(arch_roots_[v]);
      out.push_back(std::conj(arch_roots_[v]));
    }
    return out;
  }
  static CC eval_at_root(const QVec& power_coords, CC root);

  // Units.
  int unit_rank() const { return r1_ + r2_ - 1; }
  const std::vector<FieldElement>& fundamental_units() const { return fund_units_; }
  const FieldElement& torsion_generator() const { return torsion_gen_; }
  int torsion_order() const { return torsion_order_; }
  double log_unit_covering() const { return log_unit_covering_; }
  // All units zeta^a * eps^k with |k| <= exp_bound.
  std::vector<FieldElement> units_in_window(int exp_bound) const;
  bool is_unit(const FieldElement& x) const;
  // Is x the square of a unit? (x must be a unit.)
  bool is_unit_square(const FieldElement& x) const;

  // Ideals.
  const FractionalIdeal& ring_of_integers() const { return o_; }
  FractionalIdeal ideal(const std::vector<FieldElement>& gens) const;
  FractionalIdeal principal_ideal(const FieldElement& x) const;
  FractionalIdeal ideal_scaled(const Rat& r) const;  // r * o
  std::vector<PrimeIdeal> primes_above(const Int& p) const;
  // Fill in P.uniformizer (smallest-norm element of valuation 1, then
  // coordinate-lexicographic tie break). Lazy because it costs an enumeration.
  void compute_uniformizer(PrimeIdeal& P) const;
  int valuation(const FractionalIdeal& a, const PrimeIdeal& P) const;
  int valuation(const FieldElement& x, const PrimeIdeal& P) const;
  // All primes dividing the (nonzero) fractional ideal, with valuations.
  std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const FractionalIdeal& a) const;

  // Class group.
  const std::vector<FractionalIdeal>& class_representatives() const { return class_reps_; }
  int class_number() const { return static_cast<int>(class_reps_.size()); }
  // Generator search below the balanced-embedding bound; exact.
  bool is_principal(const FractionalIdeal& a, FieldElement* generator = nullptr) const;
  int class_index_of(const FractionalIdeal& a) const;  // which theta_i class

  // Spec operations.
  bool is_totally_positive(const FieldElement& x) const;
  // Unit u minimizing the balanced-embedding defect of u*x (x totally nonzero).
  FieldElement unit_balance_unit(const FieldElement& x) const;
  SubfieldInfo maximal_totally_real_subfield() const;
  // Exact membership of x in the Q-span of the maximal totally real subfield.
  bool is_totally_real_element(const FieldElement& x) const;

  // Enumerate elements x of the fractional ideal `a` with |x_v| <= bound_v
  // (plain absolute value per archimedean place), zero excluded. Exact up to
  // floating-point boundary fuzz `slack` (bounds stretched by 1+slack, then
  // exact-ish filtering with the embeddings). Deterministic order.
  std::vector<FieldElement> elements_in_box(const FractionalIdeal& a,
                                            const std::vector<double>& bounds,
                                            std::uint64_t node_budget = 1000000,
                                            double slack = 1e-9) const;

  // Constant recorded for Lemma-5(c)-style comparisons: max over the integral
  // basis u_i and archimedean v of |(u_i)_v|.
  double basis_operator_norm() const { return cF_; }

  double minkowski_bound() const;
  std::string str() const;

 private:
  NumberField() = default;
  void init(const std::vector<Int>& poly, const QMat* basis_opt);
  void compute_embeddings();
  void compute_torsion();
  void compute_units();
  void compute_class_group();
  QVec power_to_basis(const QVec& power_coords) const;

  int n_ = 0, r1_ = 0, r2_ = 0;
  std::vector<Int> poly_;
  Int poly_disc_ = 0, disc_ = 0, index_ = 1;
  QMat basis_;      // rows: integral basis over power basis
  QMat basis_inv_;  // power -> integral basis
  std::vector<QMat> mult_;  // mult_[i]: matrix of multiplication by u_i
  std::vector<CC> arch_roots_;  // r1 real roots then r2 complex (Im > 0)
  FractionalIdeal o_;
  std::vector<FieldElement> fund_units_;
  FieldElement torsion_gen_;
  int torsion_order_ = 2;
  double log_unit_covering_ = 0.0;
  double cF_ = 1.0;
  std::vector<FractionalIdeal> class_reps_;

  friend class FieldElement;
  friend class FractionalIdeal;
  friend class ResidueField;
};

// Module |x|_v at a place (exact rational at finite places).
double module_at_arch(const FieldElement& x, int v);
Rat module_at_finite(const NumberField& F, const FieldElement& x, const PrimeIdeal& P);

// Monic minimal polynomial of x over Q, exact.
QPoly minimal_polynomial_over_Q(const FieldElement& x);

}  // namespace gl2lab
