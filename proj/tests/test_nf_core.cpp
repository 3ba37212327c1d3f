#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "gl2lab/number_field.hpp"

using namespace gl2lab;

namespace {
std::shared_ptr<const NumberField> Qfield() { return NumberField::make({Int(0), Int(1)}); }
std::shared_ptr<const NumberField> Qi() { return NumberField::make({Int(1), Int(0), Int(1)}); }
std::shared_ptr<const NumberField> Qsqrt2() { return NumberField::make({Int(-2), Int(0), Int(1)}); }
// Q(sqrt(-3)) via x^2 - x + 1 (root = 6th root of unity), power basis is maximal.
std::shared_ptr<const NumberField> Qw3() { return NumberField::make({Int(1), Int(-1), Int(1)}); }
std::shared_ptr<const NumberField> Qsqrt5() { return NumberField::make({Int(-1), Int(-1), Int(1)}); }
std::shared_ptr<const NumberField> Qzeta5() {
  return NumberField::make({Int(1), Int(1), Int(1), Int(1), Int(1)});
}
std::shared_ptr<const NumberField> Qsqrtm5() { return NumberField::make({Int(5), Int(0), Int(1)}); }
}  // namespace

TEST_CASE("Q(i): classical invariants") {
  auto F = Qi();
  CHECK(F->degree() == 2);
  CHECK(F->r1() == 0);
  CHECK(F->r2() == 1);
  CHECK(F->discriminant() == -4);
  CHECK(F->class_number() == 1);
  CHECK(F->torsion_order() == 4);
  CHECK(F->unit_rank() == 0);
}

TEST_CASE("degree 1 accepted as Q") {
  auto F = NumberField::make({Int(-1), Int(1)});  // x - 1
  CHECK(F->degree() == 1);
  CHECK(F->class_number() == 1);
  CHECK(F->torsion_order() == 2);
  CHECK(F->fundamental_units().empty());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(NumberField::make({Int(-1), Int(0), Int(1)}), FieldError);  // reducible
  CHECK_THROWS_AS(
      NumberField::make({Int(1), Int(0), Int(0), Int(0), Int(0), Int(1)}),
      FieldError);  // degree 5
  // x^2+3 is not monogenic via this polynomial (index 2): rejected without basis.
  CHECK_THROWS_AS(NumberField::make({Int(3), Int(0), Int(1)}), FieldError);
  // ... but accepted with the supplied basis {1, (1+alpha)/2}.
  QMat basis = {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
  auto F = NumberField::make({Int(3), Int(0), Int(1)}, basis);
  CHECK(F->discriminant() == -3);
  CHECK(F->torsion_order() == 6);
}

TEST_CASE("Q(sqrt2): fundamental unit log embeddings sum to zero") {
  auto F = Qsqrt2();
  CHECK(F->r1() == 2);
  CHECK(F->r2() == 0);
  CHECK(F->discriminant() == 8);
  REQUIRE(F->fundamental_units().size() == 1);
  const auto& u = F->fundamental_units()[0];
  CHECK(abs(u.norm()) == 1);
  double s = std::log(static_cast<double>(u.abs_embed(0))) +
             std::log(static_cast<double>(u.abs_embed(1)));
  CHECK(std::fabs(s) < 1e-12);
  // 1 + sqrt(2) has |.| = 2.414...; fundamental for Z[sqrt2].
  double big = std::max(static_cast<double>(u.abs_embed(0)), static_cast<double>(u.abs_embed(1)));
  CHECK(big == doctest::Approx(1 + std::sqrt(2)).epsilon(1e-12));
}

TEST_CASE("Q(sqrt5): Pell index refinement reaches the golden ratio") {
  auto F = Qsqrt5();
  REQUIRE(F->fundamental_units().size() == 1);
  const auto& u = F->fundamental_units()[0];
  double big = std::max(static_cast<double>(u.abs_embed(0)), static_cast<double>(u.abs_embed(1)));
  CHECK(big == doctest::Approx((1 + std::sqrt(5)) / 2).epsilon(1e-12));
}

TEST_CASE("Q(zeta5): signature, units, torsion") {
  auto F = Qzeta5();
  CHECK(F->r1() == 0);
  CHECK(F->r2() == 2);
  CHECK(F->discriminant() == 125);
  CHECK(F->torsion_order() == 10);
  REQUIRE(F->fundamental_units().size() == 1);
  CHECK(F->class_number() == 1);
}

TEST_CASE("Q(sqrt-5): class number 2") {
  auto F = Qsqrtm5();
  CHECK(F->class_number() == 2);
  const auto& reps = F->class_representatives();
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == F->ring_of_integers());
  // Pairwise non-principality of theta_i/theta_j.
  CHECK(!F->is_principal(reps[1] * reps[0].inverse()));
  // theta_1^2 is principal (2-torsion class group).
  CHECK(F->is_principal(reps[1] * reps[1]));
}

TEST_CASE("ideal arithmetic: norm multiplicativity and inverse") {
  auto F = Qi();
  FieldElement a = F->element({Rat(1), Rat(1)});   // 1 + i
  FieldElement b = F->element({Rat(3), Rat(2)});   // 3 + 2i
  auto A = F->principal_ideal(a), B = F->principal_ideal(b);
  CHECK(A.norm() == Rat(2));
  CHECK(B.norm() == Rat(13));
  CHECK((A * B).norm() == Rat(26));
  auto Ainv = A.inverse();
  CHECK((A * Ainv) == F->ring_of_integers());
  CHECK(Ainv.norm() == Rat(1, 2));
  // Intersection of (2) and (3) in Z[i] is (6).
  auto I2 = F->ideal_scaled(Rat(2)), I3 = F->ideal_scaled(Rat(3));
  CHECK(I2.intersect(I3) == F->ideal_scaled(Rat(6)));
  // gcd of (1+i) and (3) is the whole ring.
  CHECK((A + I3) == F->ring_of_integers());
}

TEST_CASE("module_at: Q(i), x = 1+i") {
  auto F = Qi();
  FieldElement x = F->element({Rat(1), Rat(1)});
  CHECK(x.module(0) == doctest::Approx(2.0).epsilon(1e-14));
  auto primes2 = F->primes_above(Int(2));
  REQUIRE(primes2.size() == 1);
  CHECK(primes2[0].e == 2);
  Rat m = module_at_finite(*F, x, primes2[0]);
  CHECK(m == Rat(1, 2));
}

TEST_CASE("product formula on random elements") {
  std::mt19937_64 rng(7);
  for (auto F : {Qi(), Qsqrt2(), Qw3(), Qzeta5()}) {
    for (int trial = 0; trial < 25; ++trial) {
      QVec c(F->degree());
      bool zero = true;
      for (auto& x : c) {
        long v = static_cast<long>(rng() % 9) - 4;
        x = Rat(v);
        if (v != 0) zero = false;
      }
      if (zero) c[0] = 1;
      FieldElement x = F->element(c);
      // product over finite places is 1/|N(x)| exactly
      Rat nrm = abs(x.norm());
      Rat finpart = 1;
      for (const auto& [P, v] : F->factor_ideal(F->principal_ideal(x)))
        finpart *= module_at_finite(*F, x, P);
      CHECK(finpart == 1 / nrm);
      double arch = x.module_infty();
      CHECK(arch == doctest::Approx(std::fabs(nrm.get_d())).epsilon(1e-12));
    }
  }
}

TEST_CASE("valuations and uniformizers") {
  auto F = Qw3();  // Q(sqrt(-3)), disc -3
  auto p3 = F->primes_above(Int(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].e == 2);
  CHECK(p3[0].norm == 3);
  F->compute_uniformizer(p3[0]);
  CHECK(F->valuation(p3[0].uniformizer, p3[0]) == 1);
  CHECK(F->valuation(F->from_rational(Rat(3)), p3[0]) == 2);
  auto p7 = F->primes_above(Int(7));
  REQUIRE(p7.size() == 2);  // 7 = 1 mod 3 splits
  CHECK(p7[0].norm == 7);
}

TEST_CASE("unit_balance") {
  auto FQ = Qfield();
  FieldElement mx = FQ->from_rational(Rat(-5));
  auto u = FQ->unit_balance_unit(mx);
  CHECK((mx * u).coords()[0] == Rat(5));

  auto F = Qsqrt2();
  // x = (3+2*sqrt2) = (1+sqrt2)^2; balancing should produce |x*u| = 1 at both places.
  FieldElement x = F->element({Rat(3), Rat(2)});
  FieldElement u2 = F->unit_balance_unit(x);
  FieldElement bal = x * u2;
  CHECK(std::fabs(static_cast<double>(bal.abs_embed(0)) - 1.0) < 1e-9);
  CHECK(std::fabs(static_cast<double>(bal.abs_embed(1)) - 1.0) < 1e-9);
  // module is preserved
  CHECK(bal.module_infty() == doctest::Approx(x.module_infty()).epsilon(1e-12));
}

TEST_CASE("is_totally_positive") {
  auto FQ = Qfield();
  CHECK(!FQ->is_totally_positive(FQ->from_rational(Rat(-1))));
  auto F = Qi();
  CHECK(F->is_totally_positive(F->element({Rat(0), Rat(5)})));  // no real places
  auto F2 = Qsqrt2();
  CHECK(!F2->is_totally_positive(F2->generator()));  // sqrt2 has a negative embedding
  FieldElement tp = F2->element({Rat(3), Rat(1)});   // 3 + sqrt2, both embeddings > 0
  CHECK(F2->is_totally_positive(tp));
}

TEST_CASE("maximal totally real subfield") {
  auto F2 = Qsqrt2();
  auto sub = F2->maximal_totally_real_subfield();
  CHECK(sub.m == 1);
  CHECK(sub.K->degree() == 2);

  auto Fi = Qi();
  auto subi = Fi->maximal_totally_real_subfield();
  CHECK(subi.m == 2);
  CHECK(subi.K->degree() == 1);

  auto F5 = Qzeta5();
  auto sub5 = F5->maximal_totally_real_subfield();
  CHECK(sub5.m == 2);
  REQUIRE(sub5.K->degree() == 2);
  CHECK(sub5.K->r1() == 2);  // real quadratic: Q(sqrt5)
  CHECK(sub5.K->discriminant() == 5);
}

TEST_CASE("elements_in_box basics") {
  auto F = Qi();
  // Gaussian integers with |x| <= sqrt(2), nonzero: 4 units + 4 of norm 2.
  auto v = F->elements_in_box(F->ring_of_integers(), {std::sqrt(2.0)});
  CHECK(v.size() == 8);
  // exact-radius robustness: |x| <= 1
  auto u = F->elements_in_box(F->ring_of_integers(), {1.0});
  CHECK(u.size() == 4);
}

TEST_CASE("unit square classes") {
  auto F = Qi();
  // -1 = i^2 is a unit square in Z[i]; i is not.
  CHECK(F->is_unit_square(F->from_rational(Rat(-1))));
  CHECK(!F->is_unit_square(F->generator()));
  auto F2 = Qsqrt2();
  const auto& eps = F2->fundamental_units()[0];
  CHECK(!F2->is_unit_square(eps));
  CHECK(F2->is_unit_square(eps * eps));
  CHECK(!F2->is_unit_square(F2->from_rational(Rat(-1))));
}
