#pragma once

// Realness rigidity: the discriminant of xi over the maximal totally real
// subfield K, its rational norm computed two independent ways, and the
// quantitative inequality that forces near-real algebraic numbers with
// bounded denominator to be exactly totally real.

#include <optional>
#include <vector>

#include "gl2lab/number_field.hpp"

namespace gl2lab {

struct RigidityInstance {
  FieldElement xi;
  FractionalIdeal k_ideal, l_ideal;  // coprime integral, xi*o = k/l
  double A = 1;                      // |xi_v| <= A at every arch place
  std::vector<double> delta;         // |Im xi_v| <= A sqrt(delta_v)
};

// Split xi*o into coprime integral numerator/denominator ideals.
std::pair<FractionalIdeal, FractionalIdeal> numerator_denominator(const NumberField& F,
                                                                  const FieldElement& xi);

// Build an instance; A and delta taken as given (the hypothesis is checked
// separately).
RigidityInstance make_rigidity_instance(const NumberField& F, const FieldElement& xi, double A,
                                        std::vector<double> delta);

struct DiscriminantOverK {
  bool degree_drop = false;  // xi fails to generate F over K
  int m = 1;                 // [F : K]
  Rat norm_exact = 0;        // |N_{K/Q}(Delta)|, exact
  double norm_numeric = 0;   // embedding-pair product route
};

// Delta = Res(p, p') for p the minimal polynomial of xi over K, with
// |N_{K/Q}(Delta)| computed exactly, plus the numeric product over pairs of
// distinct embeddings agreeing on K.
DiscriminantOverK discriminant_over_K(const NumberField& F, const FieldElement& xi);

enum class RigidityVerdict { holds, violated, not_applicable };

struct RigidityCheck {
  RigidityVerdict verdict = RigidityVerdict::not_applicable;
  double lhs = 1;          // always 1
  double rhs = 0;          // ((2A)^n (Nl)^2)^{2(m-1)} |delta|_C
  bool hypothesis_ok = false;
  bool norm_chain_ok = true;  // |N(Delta)| <= (2A)^{n(m-1)} |delta|_C^{1/2}
};

// Checks the hypothesis, then asserts the inequality and the intermediate
// norm bound.
RigidityCheck check_rigidity(const NumberField& F, const RigidityInstance& inst);

// |delta|_C = prod over complex places of delta_v^2.
double delta_module_complex(const NumberField& F, const std::vector<double>& delta);

enum class RealnessOutcome { totally_real_proven, inconclusive, not_applicable };

// If the rigidity right side drops below 1 under a valid hypothesis, the
// element must be exactly totally real; verified by exact subfield
// membership.
RealnessOutcome realness_certificate(const NumberField& F, const FieldElement& xi, double A,
                                     const FractionalIdeal& l_ideal,
                                     const std::vector<double>& delta);

}  // namespace gl2lab
