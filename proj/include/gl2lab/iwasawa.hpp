#pragma once

// Explicit Iwasawa decompositions modulo the Atkin-Lehner group, the adelic
// height of the restricted matrix shapes this project manipulates
// (rational matrix x archimedean upper-triangular x ideal-class twist), and
// reduction of a point to the special representative of maximal |y|_infty.

#include <array>
#include <complex>
#include <optional>

#include "gl2lab/lattice.hpp"
#include "gl2lab/number_field.hpp"

namespace gl2lab {

// --- archimedean ------------------------------------------------------------

struct ArchIwasawa {
  double y = 0;               // positive representative
  std::complex<double> x;     // real part only at real places
  std::array<std::complex<double>, 4> k;  // the compact-times-center factor (a b; c d)
};

// Decompose a single invertible 2x2 block over R (entries' imaginary parts
// zero) or C. |y| = |ad - bc| / (|c|^2 + |d|^2).
ArchIwasawa arch_iwasawa(const std::array<std::complex<double>, 4>& m, bool complex_place);

// Entrywise max error of n(x) a(y) k against the input.
double arch_recomposition_error(const std::array<std::complex<double>, 4>& m, bool complex_place,
                                const ArchIwasawa& dec);

// --- non-archimedean ---------------------------------------------------------

struct NonarchIwasawa {
  int val_y = 0;             // v_p(y); |y|_p = (Np)^{-val_y}
  bool atkin_lehner = false; // true when k lands in the A_v coset
};

// Exact local decomposition data from entry valuations. Entries of the matrix
// are field elements; `divides_level` marks p | n. INT_MAX encodes v(0).
NonarchIwasawa nonarch_iwasawa(const NumberField& F, const std::array<FieldElement, 4>& m,
                               const PrimeIdeal& P, bool divides_level);

// Valuation-level core of (the two-case local formula), exposed for tests:
// values are entry valuations, vdet = v(ad - bc).
NonarchIwasawa nonarch_iwasawa_vals(long va, long vb, long vc, long vd, long vdet,
                                    bool divides_level);

// --- global shapes ------------------------------------------------------------

// g = gamma * n(x)a(y) * diag(theta_i, 1), the only adelic matrices needed.
struct AdelicShape {
  std::array<FieldElement, 4> gamma;  // in GL_2(F)
  ArchPoint arch;                     // the (y, x) part
  int class_index = 0;                // twist by theta_i
};

// height(g) = prod_v |y_v|_v over all places; exact rational at the finite
// places, floating at the archimedean ones.
double height(const NumberField& F, const AdelicShape& g, const FractionalIdeal& level);

// --- reduction to the special set ---------------------------------------------

struct SpecialRep {
  ArchPoint point;                 // unit-balanced y, x reduced mod theta_i o
  int class_index = 0;
  std::vector<int> atkin_lehner_signs;  // one per prime dividing the level
  double y_mod = 0;                // |y|_infty of the representative
  // The reducing matrix (a b; c d), det a unit, bottom row from the search.
  std::array<FieldElement, 4> gamma;
};

// Search over completable bottom rows (c, d) in theta_i^{-1} n x o, exact
// within the provably sufficient radius derived from the current best height.
SpecialRep reduce_to_special(const NumberField& F, const ArchPoint& P, int class_index,
                             const FractionalIdeal& level, std::uint64_t node_budget = 2000000);

}  // namespace gl2lab
