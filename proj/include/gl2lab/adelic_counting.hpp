#pragma once

// Counting field elements in adelic boxes and selecting the auxiliary
// square-free ideal q whose quadratic residues among units are exactly the
// squared units.

#include <vector>

#include "gl2lab/number_field.hpp"

namespace gl2lab {

struct AdelicBox {
  enum class FiniteMode { subset_of, exact_ideal };
  std::vector<double> arch_module_bounds;  // per archimedean place: |t_v|_v
  FractionalIdeal finite_ideal;
  FiniteMode mode = FiniteMode::subset_of;
};

struct BoxCount {
  long count = 0;
  std::vector<FieldElement> elements;
};

// Exact enumeration of {x in F^x : |x|_v <= bound_v at infinity, and
// x in m (subset mode) or x o = m (exact mode)}.
BoxCount count_box(const NumberField& F, const AdelicBox& box,
                   std::uint64_t node_budget = 2000000);

// Brute-force subset-mode oracle: coefficient box scan with direct module
// tests, no lattice pruning.
long count_box_oracle(const NumberField& F, const AdelicBox& box,
                      std::uint64_t budget = 20000000);

// |t|_A of the box: product of archimedean bounds divided by Nm.
double box_module(const NumberField& F, const AdelicBox& box);

struct AuxIdealQ {
  FractionalIdeal ideal;
  std::vector<PrimeIdeal> primes;
  Int norm = 1;
};

// Square-free q with C <= Nq <= 2C such that every unit that is a quadratic
// residue modulo q is a squared unit. Greedy scan over primes of increasing
// norm (odd, non-index); throws FieldError when no combination fits the
// window.
AuxIdealQ choose_q(const NumberField& F, const Int& C);

// The defining predicate, re-checked over the unit window: every unit that
// is a square modulo every prime of q must be a unit square. Returns the
// number of units tested.
int verify_q(const NumberField& F, const AuxIdealQ& q, int unit_exp_bound = 6);

// Nontrivial square-class representatives of the unit group.
std::vector<FieldElement> unit_square_class_reps(const NumberField& F);

// Is the (p-integral) element a nonzero square in the residue field of P?
bool is_square_mod(const NumberField& F, const PrimeIdeal& P, const FieldElement& x);

}  // namespace gl2lab
