#include "gl2lab/adelic_counting.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

namespace gl2lab {

namespace {
std::vector<double> abs_bounds(const NumberField& F, const std::vector<double>& module_bounds) {
  std::vector<double> out(module_bounds.size());
  for (int v = 0; v < F.num_arch_places(); ++v)
    out[v] = std::pow(module_bounds[v], 1.0 / F.arch_degree(v));
  return out;
}
}  // namespace

double box_module(const NumberField& F, const AdelicBox& box) {
  double t = 1;
  for (double b : box.arch_module_bounds) t *= b;
  return t / std::fabs(box.finite_ideal.norm().get_d());
}

BoxCount count_box(const NumberField& F, const AdelicBox& box, std::uint64_t node_budget) {
  BoxCount out;
  std::vector<double> bounds = abs_bounds(F, box.arch_module_bounds);
  if (box.mode == AdelicBox::FiniteMode::subset_of) {
    out.elements = F.elements_in_box(box.finite_ideal, bounds, node_budget);
    out.count = static_cast<long>(out.elements.size());
    return out;
  }
  // exact-ideal mode: x o = m, i.e. x = u * x0 for a fixed generator x0 and
  // u running over the unit group (empty when m is not principal).
  FieldElement x0;
  if (!F.is_principal(box.finite_ideal, &x0)) return out;
  std::vector<FieldElement> torsion;
  {
    FieldElement t = F.one();
    for (int i = 0; i < F.torsion_order(); ++i) {
      torsion.push_back(t);
      t = t * F.torsion_generator();
    }
  }
  if (F.fundamental_units().empty()) {
    for (const auto& t : torsion) {
      FieldElement x = x0 * t;
      bool ok = true;
      for (int v = 0; v < F.num_arch_places() && ok; ++v)
        ok = static_cast<double>(x.abs_embed(v)) <= bounds[v] * (1 + 1e-9);
      if (ok) out.elements.push_back(x);
    }
  } else {
    const FieldElement& eps = F.fundamental_units()[0];
    // |x0_v| * |eps_v|^k <= bound_v for all v; k range per place, intersected.
    double le0 = std::log(static_cast<double>(eps.abs_embed(0)));
    long klo = -100000, khi = 100000;
    for (int v = 0; v < F.num_arch_places(); ++v) {
      double lev = std::log(static_cast<double>(eps.abs_embed(v)));
      double room = std::log(bounds[v]) - std::log(static_cast<double>(x0.abs_embed(v)));
      if (std::fabs(lev) < 1e-14) {
        if (room < -1e-12) return out;  // no k can help at this place
        continue;
      }
      double edge = room / lev;
      if (lev > 0)
        khi = std::min(khi, static_cast<long>(std::floor(edge + 1e-9)));
      else
        klo = std::max(klo, static_cast<long>(std::ceil(edge - 1e-9)));
    }
    (void)le0;
    for (long k = klo; k <= khi; ++k) {
      FieldElement x = x0 * eps.pow(k);
      bool ok = true;
      for (int v = 0; v < F.num_arch_places() && ok; ++v)
        ok = static_cast<double>(x.abs_embed(v)) <= bounds[v] * (1 + 1e-9);
      if (!ok) continue;
      for (const auto& t : torsion) out.elements.push_back(x * t);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.count = static_cast<long>(out.elements.size());
  return out;
}

long count_box_oracle(const NumberField& F, const AdelicBox& box, std::uint64_t budget) {
  if (box.mode != AdelicBox::FiniteMode::subset_of)
    throw FieldError("oracle only covers subset mode");
  std::vector<double> bounds = abs_bounds(F, box.arch_module_bounds);
  auto belts = box.finite_ideal.basis_elements();
  const int n = F.degree();
  // Coefficient bounds from the inverse embedding matrix.
  Eigen::MatrixXd B(n, n);
  for (int i = 0; i < n; ++i) {
    int col = 0;
    for (int v = 0; v < F.num_arch_places(); ++v) {
      CC z = belts[i].embed(v);
      B(i, col++) = static_cast<double>(z.real());
      if (F.arch_degree(v) == 2) B(i, col++) = static_cast<double>(z.imag());
    }
  }
  Eigen::MatrixXd Binv = B.inverse();
  double R = 0;
  for (int v = 0, col = 0; v < F.num_arch_places(); ++v) {
    R = std::max(R, bounds[v]);
    col += F.arch_degree(v);
  }
  R *= std::sqrt(static_cast<double>(F.num_arch_places()));
  std::vector<long> lo(n), hi(n);
  double total = 1;
  for (int i = 0; i < n; ++i) {
    double dual = Binv.col(i).norm() * R * std::sqrt(2.0) + 1;
    lo[i] = static_cast<long>(-std::ceil(dual));
    hi[i] = static_cast<long>(std::ceil(dual));
    total *= (hi[i] - lo[i] + 1);
    if (total > static_cast<double>(budget)) throw BudgetExceeded("count_box_oracle");
  }
  long count = 0;
  std::vector<long> k(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      bool zero = true;
      for (long v : k) zero = zero && v == 0;
      if (zero) return;
      FieldElement x = F.zero();
      for (int j = 0; j < n; ++j)
        if (k[j] != 0) x = x + belts[j] * Rat(k[j]);
      for (int v = 0; v < F.num_arch_places(); ++v)
        if (static_cast<double>(x.abs_embed(v)) > bounds[v] * (1 + 1e-9)) return;
      ++count;
      return;
    }
    for (k[i] = lo[i]; k[i] <= hi[i]; ++k[i]) rec(i + 1);
  };
  rec(0);
  return count;
}

std::vector<FieldElement> unit_square_class_reps(const NumberField& F) {
  std::vector<FieldElement> gens = {F.torsion_generator()};
  for (const auto& e : F.fundamental_units()) gens.push_back(e);
  std::vector<FieldElement> reps = {F.one()};
  for (const auto& g : gens) {
    std::vector<FieldElement> next = reps;
    for (const auto& r : reps) next.push_back(r * g);
    reps = next;
  }
  // Deduplicate modulo unit squares; drop the trivial class.
  std::vector<FieldElement> out;
  for (const auto& r : reps) {
    if (F.is_unit_square(r)) continue;
    bool dup = false;
    for (const auto& o : out)
      if (F.is_unit_square(r * o)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(r);
  }
  return out;
}

bool is_square_mod(const NumberField& F, const PrimeIdeal& P, const FieldElement& x) {
  ResidueField R(&F, P);
  FpPoly r = R.reduce(x);
  if (R.is_zero(r)) throw FieldError("is_square_mod: element reduces to zero");
  return R.is_square(r);
}

AuxIdealQ choose_q(const NumberField& F, const Int& C) {
  if (C < 2) throw FieldError("choose_q: C must be >= 2");
  auto survivors = unit_square_class_reps(F);
  AuxIdealQ q;
  q.ideal = F.ring_of_integers();
  q.norm = 1;
  std::vector<std::pair<Int, FpPoly>> used;
  auto already_used = [&](const PrimeIdeal& P) {
    for (const auto& [pp, g] : used)
      if (pp == P.p && g == P.gbar) return true;
    return false;
  };
  auto add_prime = [&](const PrimeIdeal& P) {
    q.primes.push_back(P);
    q.ideal = q.ideal * P.ideal;
    q.norm *= P.norm;
    used.emplace_back(P.p, P.gbar);
  };
  // Stage 1: kill every nontrivial unit square class.
  for (Int p = 3; !survivors.empty() && p < 5000;
       mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (F.discriminant() % p == 0) continue;  // stay unramified and odd
    for (const auto& P : F.primes_above(p)) {
      if (survivors.empty()) break;
      std::vector<FieldElement> still;
      bool kills = false;
      for (const auto& u : survivors) {
        if (is_square_mod(F, P, u))
          still.push_back(u);
        else
          kills = true;
      }
      if (kills) {
        add_prime(P);
        survivors = still;
      }
    }
  }
  if (!survivors.empty()) throw FieldError("choose_q: could not separate unit classes");
  // Stage 2: pad into the window [C, 2C] with further primes.
  if (q.norm > 2 * C) throw FieldError("choose_q: class primes already exceed the window");
  for (Int p = 3; q.norm < C && p < 100000; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (F.discriminant() % p == 0) continue;
    for (const auto& P : F.primes_above(p)) {
      if (q.norm >= C) break;
      if (already_used(P)) continue;
      if (q.norm * P.norm <= 2 * C) add_prime(P);
    }
  }
  if (q.norm < C || q.norm > 2 * C)
    throw FieldError("choose_q: no admissible prime combination in the norm window");
  return q;
}

int verify_q(const NumberField& F, const AuxIdealQ& q, int unit_exp_bound) {
  int tested = 0;
  for (const auto& u : F.units_in_window(unit_exp_bound)) {
    ++tested;
    bool qr_everywhere = true;
    for (const auto& P : q.primes)
      if (!is_square_mod(F, P, u)) {
        qr_everywhere = false;
        break;
      }
    if (qr_everywhere && !F.is_unit_square(u))
      throw FieldError("verify_q: non-square unit is a residue modulo q");
  }
  return tested;
}

}  // namespace gl2lab
