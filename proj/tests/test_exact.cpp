#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gl2lab/exact.hpp"
#include "gl2lab/poly.hpp"

using namespace gl2lab;

TEST_CASE("hnf of a simple lattice") {
  ZMat a = {{2, 0}, {1, 1}, {0, 2}};
  ZMat h = hnf_rows(a);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] == 1);
  CHECK(h[0][1] == 1);
  CHECK(h[1][0] == 0);
  CHECK(h[1][1] == 2);
}

TEST_CASE("right kernel") {
  ZMat a = {{1, 2, 3}};
  ZMat k = z_right_kernel(a);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    Int s = v[0] + 2 * v[1] + 3 * v[2];
    CHECK(s == 0);
  }
}

TEST_CASE("rational inverse and det") {
  QMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK(qmat_det(a) == Rat(1));
  QMat inv = qmat_inverse(a);
  QMat prod = qmat_mul(a, inv);
  CHECK(prod[0][0] == 1);
  CHECK(prod[0][1] == 0);
  CHECK(prod[1][0] == 0);
  CHECK(prod[1][1] == 1);
}

TEST_CASE("resultant and discriminant") {
  // disc(x^2+1) = -4
  QPoly f(QVec{Rat(1), Rat(0), Rat(1)});
  CHECK(qpoly_discriminant(f) == Rat(-4));
  // disc(x^2-x-1) = 5
  QPoly g(QVec{Rat(-1), Rat(-1), Rat(1)});
  CHECK(qpoly_discriminant(g) == Rat(5));
  // disc(x^4+x^3+x^2+x+1) = 125
  QPoly c5 = QPoly::from_int({1, 1, 1, 1, 1});
  CHECK(qpoly_discriminant(c5) == Rat(125));
}

TEST_CASE("irreducibility, degree <= 4") {
  CHECK(qpoly_is_irreducible_over_Q(QPoly::from_int({1, 0, 1})));        // x^2+1
  CHECK(!qpoly_is_irreducible_over_Q(QPoly::from_int({-1, 0, 1})));      // x^2-1
  CHECK(qpoly_is_irreducible_over_Q(QPoly::from_int({1, 1, 1, 1, 1}))); // Phi_5
  CHECK(!qpoly_is_irreducible_over_Q(QPoly::from_int({1, 0, 2, 0, 1}))); // (x^2+1)^2
  CHECK(qpoly_is_irreducible_over_Q(QPoly::from_int({-2, 0, 0, 0, 1}))); // x^4-2
  CHECK(!qpoly_is_irreducible_over_Q(QPoly::from_int({4, 0, 0, 0, 1}))); // x^4+4
}

TEST_CASE("mod p factorization, degree <= 4") {
  // x^2+1 mod 5 = (x+2)(x+3)
  FpPoly f{1, 0, 1};
  auto fac = fp_factor(f, 5);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].factor.size() == 2);
  // x^2+1 mod 7 irreducible
  fac = fp_factor(f, 7);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].factor.size() == 3);
  // Phi_5 mod 19: 19 has order 2 mod 5 -> two quadratic factors
  FpPoly c5{1, 1, 1, 1, 1};
  fac = fp_factor(c5, 19);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].factor.size() == 3);
  CHECK(fac[1].factor.size() == 3);
  // Phi_5 mod 11: 11 = 1 mod 5 -> four linear factors
  fac = fp_factor(c5, 11);
  int count = 0;
  for (auto& x : fac) count += x.multiplicity;
  CHECK(count == 4);
}

TEST_CASE("dedekind criterion") {
  // x^2 - 5: disc 20, not maximal at 2.
  CHECK(!dedekind_p_maximal({Int(-5), Int(0), Int(1)}, 2));
  // x^2 - x - 1: disc 5, maximal everywhere (5 squarefree anyway).
  CHECK(dedekind_p_maximal({Int(-1), Int(-1), Int(1)}, 5));
  // x^2+1: disc -4; maximal at 2.
  CHECK(dedekind_p_maximal({Int(1), Int(0), Int(1)}, 2));
  // x^2+3: disc -12; NOT maximal at 2 (ring of integers is Z[(1+sqrt-3)/2]).
  CHECK(!dedekind_p_maximal({Int(3), Int(0), Int(1)}, 2));
}
