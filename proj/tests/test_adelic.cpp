#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "gl2lab/adelic_counting.hpp"

using namespace gl2lab;

namespace {
std::shared_ptr<const NumberField> Qfield() { return NumberField::make({Int(0), Int(1)}); }
std::shared_ptr<const NumberField> Qi() { return NumberField::make({Int(1), Int(0), Int(1)}); }
std::shared_ptr<const NumberField> Qsqrt2() { return NumberField::make({Int(-2), Int(0), Int(1)}); }
}  // namespace

TEST_CASE("count_box on Q") {
  auto F = Qfield();
  AdelicBox box;
  box.arch_module_bounds = {10.0};
  box.finite_ideal = F->ring_of_integers();
  box.mode = AdelicBox::FiniteMode::subset_of;
  auto r = count_box(*F, box);
  CHECK(r.count == 20);  // {+-1, ..., +-10}

  AdelicBox exact;
  exact.arch_module_bounds = {10.0};
  exact.finite_ideal = F->ideal_scaled(Rat(5));
  exact.mode = AdelicBox::FiniteMode::exact_ideal;
  auto r2 = count_box(*F, exact);
  CHECK(r2.count == 2);  // {+-5}
}

TEST_CASE("count_box on Q(i): norm <= 2") {
  auto F = Qi();
  AdelicBox box;
  box.arch_module_bounds = {2.0};  // module bound: |x|^2 <= 2
  box.finite_ideal = F->ring_of_integers();
  box.mode = AdelicBox::FiniteMode::subset_of;
  auto r = count_box(*F, box);
  CHECK(r.count == 8);  // 4 units + 4 elements of norm 2
  CHECK(r.count == count_box_oracle(*F, box));
}

TEST_CASE("subset count matches oracle on random boxes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(1.0, 30.0);
  for (auto Fp : {Qfield(), Qi(), Qsqrt2()}) {
    const NumberField& F = *Fp;
    for (int t = 0; t < 12; ++t) {
      AdelicBox box;
      for (int v = 0; v < F.num_arch_places(); ++v) box.arch_module_bounds.push_back(U(rng));
      box.finite_ideal =
          (t % 3 == 0) ? F.ideal_scaled(Rat(2)) : F.ring_of_integers();
      box.mode = AdelicBox::FiniteMode::subset_of;
      auto r = count_box(F, box);
      CHECK(r.count == count_box_oracle(F, box));
    }
  }
}

TEST_CASE("exact-ideal count is unit-scaling invariant; subset dominates exact") {
  auto F = Qsqrt2();
  const auto& eps = F->fundamental_units()[0];
  AdelicBox box;
  box.arch_module_bounds = {11.0, 13.0};
  box.finite_ideal = F->ideal_scaled(Rat(3));
  box.mode = AdelicBox::FiniteMode::exact_ideal;
  auto r = count_box(*F, box);
  // scale the box by the embedding moduli of eps: the count must not change
  AdelicBox scaled = box;
  for (int v = 0; v < F->num_arch_places(); ++v)
    scaled.arch_module_bounds[v] *= eps.module(v);
  auto r2 = count_box(*F, scaled);
  CHECK(r.count == r2.count);
  // subset mode dominates
  AdelicBox sub = box;
  sub.mode = AdelicBox::FiniteMode::subset_of;
  CHECK(count_box(*F, sub).count >= r.count);
}

TEST_CASE("unit square classes") {
  auto FQ = Qfield();
  auto reps = unit_square_class_reps(*FQ);
  REQUIRE(reps.size() == 1);  // just -1
  CHECK(reps[0].coords()[0] == Rat(-1));

  auto Fi = Qi();
  auto repsi = unit_square_class_reps(*Fi);
  REQUIRE(repsi.size() == 1);  // i (since -1 = i^2 is a square)

  auto F2 = Qsqrt2();
  auto reps2 = unit_square_class_reps(*F2);
  CHECK(reps2.size() == 3);  // -1, eps, -eps
}

TEST_CASE("choose_q on Q finds a prime with -1 a non-residue") {
  auto F = Qfield();
  auto q = choose_q(*F, Int(2));
  CHECK(q.norm >= 2);
  CHECK(q.norm <= 4);
  CHECK(q.norm == 3);  // first prime with -1 non-QR is 3
  CHECK(verify_q(*F, q) > 0);
}

TEST_CASE("choose_q on Q(i): i must be a non-square mod q") {
  auto F = Qi();
  auto q = choose_q(*F, Int(3));
  bool killed = false;
  for (const auto& P : q.primes)
    if (!is_square_mod(*F, P, F->generator())) killed = true;
  CHECK(killed);
  CHECK(verify_q(*F, q) > 0);
  CHECK(q.norm >= 3);
  CHECK(q.norm <= 6);
  CHECK(q.norm == 5);  // the split prime above 5 (5 mod 8 != 1) works
}

TEST_CASE("choose_q padding reaches larger windows") {
  auto F = Qi();
  auto q = choose_q(*F, Int(50));
  CHECK(q.norm >= 50);
  CHECK(q.norm <= 100);
  CHECK(verify_q(*F, q) > 0);
  // square-free: all primes distinct
  for (std::size_t i = 0; i < q.primes.size(); ++i)
    for (std::size_t j = i + 1; j < q.primes.size(); ++j)
      CHECK(!(q.primes[i].p == q.primes[j].p && q.primes[i].gbar == q.primes[j].gbar));
}

TEST_CASE("choose_q on Q(sqrt2) separates all three classes") {
  auto F = Qsqrt2();
  auto q = choose_q(*F, Int(2));
  CHECK(verify_q(*F, q) > 0);
}
