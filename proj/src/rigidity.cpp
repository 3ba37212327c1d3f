#include "gl2lab/rigidity.hpp"

#include <cmath>

namespace gl2lab {

std::pair<FractionalIdeal, FractionalIdeal> numerator_denominator(const NumberField& F,
                                                                  const FieldElement& xi) {
  if (xi.is_zero()) throw FieldError("numerator_denominator: zero element");
  FractionalIdeal a = F.principal_ideal(xi);
  // l = denominator ideal: v(l) = max(0, -v(a)) at every prime; equivalently
  // l = (a + o)^{-1} ... computed from the factorization directly.
  FractionalIdeal k = F.ring_of_integers(), l = F.ring_of_integers();
  for (const auto& [P, v] : F.factor_ideal(a)) {
    if (v > 0)
      k = k * P.ideal.pow(v);
    else
      l = l * P.ideal.pow(-v);
  }
  return {k, l};
}

RigidityInstance make_rigidity_instance(const NumberField& F, const FieldElement& xi, double A,
                                        std::vector<double> delta) {
  RigidityInstance inst;
  inst.xi = xi;
  auto [k, l] = numerator_denominator(F, xi);
  inst.k_ideal = k;
  inst.l_ideal = l;
  inst.A = A;
  inst.delta = std::move(delta);
  return inst;
}

double delta_module_complex(const NumberField& F, const std::vector<double>& delta) {
  double out = 1;
  for (int v = 0; v < F.num_arch_places(); ++v)
    if (F.arch_degree(v) == 2) out *= delta[v] * delta[v];
  return out;
}

namespace {

// Exact m-th root of a positive rational that is known to be an m-th power.
Rat exact_root(const Rat& x, int m) {
  Int nr, dr;
  mpz_root(nr.get_mpz_t(), x.get_num_mpz_t(), m);
  mpz_root(dr.get_mpz_t(), x.get_den_mpz_t(), m);
  Rat r(nr, dr);
  Rat pw = 1;
  for (int i = 0; i < m; ++i) pw *= r;
  if (pw != x) throw FieldError("exact_root: not an exact power");
  return r;
}

}  // namespace

DiscriminantOverK discriminant_over_K(const NumberField& F, const FieldElement& xi) {
  DiscriminantOverK out;
  SubfieldInfo sub = F.maximal_totally_real_subfield();
  out.m = sub.m;
  if (out.m == 1) {
    // F totally real; the inequality is trivial and Delta plays no role.
    out.norm_exact = 1;
    out.norm_numeric = 1;
    return out;
  }
  // Degree check: xi must generate F over K.
  if (F.is_totally_real_element(xi)) {
    out.degree_drop = true;
    return out;
  }
  if (sub.K->degree() == 1) {
    // K = Q: p is the minimal polynomial of xi over Q; need deg p = n.
    QPoly p = minimal_polynomial_over_Q(xi);
    if (p.degree() != F.degree()) {
      out.degree_drop = true;
      return out;
    }
    Rat res = qpoly_resultant(p, p.derivative());
    out.norm_exact = abs(res);
  } else {
    // [K:Q] = 2, m = 2: find xi^2 = a xi + b with a, b in the K-span, then
    // Delta = Res(X^2 - aX - b, 2X - a) = -(a^2 + 4b).
    const int n = F.degree();
    const int dk = n / 2;
    // K-span basis in F: 1, w, ..., w^{dk-1}.
    std::vector<FieldElement> kb;
    FieldElement p = F.one();
    for (int i = 0; i < dk; ++i) {
      kb.push_back(p);
      p = p * sub.generator_in_F;
    }
    // Unknowns: a = sum ai kb[i], b = sum bi kb[i]; equation xi^2 = a xi + b.
    QMat Amat = qmat_zero(n, 2 * dk);
    FieldElement xi2 = xi * xi;
    for (int i = 0; i < dk; ++i) {
      FieldElement col_a = kb[i] * xi;
      for (int row = 0; row < n; ++row) {
        Amat[row][i] = col_a.coords()[row];
        Amat[row][dk + i] = kb[i].coords()[row];
      }
    }
    QVec rhs = xi2.coords();
    QVec sol = qmat_solve(Amat, rhs);
    if (sol.empty()) throw FieldError("discriminant_over_K: quadratic relation not found");
    FieldElement a = F.zero(), b = F.zero();
    for (int i = 0; i < dk; ++i) {
      a = a + kb[i] * sol[i];
      b = b + kb[i] * sol[dk + i];
    }
    FieldElement delta = -(a * a + b * Rat(4));
    // |N_{K/Q}(Delta)| = |N_{F/Q}(Delta)|^{1/m}.
    out.norm_exact = exact_root(abs(delta.norm()), out.m);
  }
  // Numeric route: product over ordered pairs of distinct embeddings of F
  // agreeing on K of |xi^sigma - xi^tau|.
  auto roots = F.all_roots();
  QVec xi_pw = F.basis_to_power(xi.coords());
  QVec w_pw = F.basis_to_power(sub.generator_in_F.coords());
  std::vector<CC> xis, ws;
  for (const auto& r : roots) {
    xis.push_back(NumberField::eval_at_root(xi_pw, r));
    ws.push_back(NumberField::eval_at_root(w_pw, r));
  }
  long double prod = 1;
  long double scale = 1;
  for (const auto& w : ws) scale = std::max(scale, std::abs(w));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      if (std::abs(ws[i] - ws[j]) > 1e-7L * scale) continue;  // must agree on K
      prod *= std::abs(xis[i] - xis[j]);
    }
  out.norm_numeric = static_cast<double>(prod);
  return out;
}

RigidityCheck check_rigidity(const NumberField& F, const RigidityInstance& inst) {
  RigidityCheck out;
  // Hypothesis: |xi_v| <= A and |Im xi_v| <= A sqrt(delta_v).
  out.hypothesis_ok = inst.A >= 1;
  for (int v = 0; v < F.num_arch_places() && out.hypothesis_ok; ++v) {
    CC z = inst.xi.embed(v);
    if (std::abs(z) > inst.A * (1 + 1e-12)) out.hypothesis_ok = false;
    if (std::fabs(static_cast<double>(z.imag())) >
        inst.A * std::sqrt(inst.delta[v]) * (1 + 1e-12))
      out.hypothesis_ok = false;
  }
  if (!out.hypothesis_ok) {
    out.verdict = RigidityVerdict::not_applicable;
    return out;
  }
  auto disc = discriminant_over_K(F, inst.xi);
  int m = disc.m;
  double n = F.degree();
  double Nl = std::fabs(inst.l_ideal.norm().get_d());
  double dC = delta_module_complex(F, inst.delta);
  out.rhs = std::pow(std::pow(2 * inst.A, n) * Nl * Nl, 2.0 * (m - 1)) * dC;
  out.lhs = 1.0;
  out.verdict = out.lhs <= out.rhs * (1 + 1e-9) ? RigidityVerdict::holds
                                                : RigidityVerdict::violated;
  if (m > 1 && !disc.degree_drop) {
    double bound = std::pow(2 * inst.A, n * (m - 1)) * std::sqrt(dC);
    out.norm_chain_ok = disc.norm_exact.get_d() <= bound * (1 + 1e-9);
  }
  return out;
}

RealnessOutcome realness_certificate(const NumberField& F, const FieldElement& xi, double A,
                                     const FractionalIdeal& l_ideal,
                                     const std::vector<double>& delta) {
  // Hypothesis gate.
  RigidityInstance inst;
  inst.xi = xi;
  inst.l_ideal = l_ideal;
  inst.A = A;
  inst.delta = delta;
  RigidityCheck chk;
  chk.hypothesis_ok = A >= 1;
  for (int v = 0; v < F.num_arch_places() && chk.hypothesis_ok; ++v) {
    CC z = xi.embed(v);
    if (std::abs(z) > A * (1 + 1e-12)) chk.hypothesis_ok = false;
    if (std::fabs(static_cast<double>(z.imag())) > A * std::sqrt(delta[v]) * (1 + 1e-12))
      chk.hypothesis_ok = false;
  }
  if (!chk.hypothesis_ok) return RealnessOutcome::not_applicable;
  SubfieldInfo sub = F.maximal_totally_real_subfield();
  int m = sub.m;
  double Nl = std::fabs(l_ideal.norm().get_d());
  double rhs = std::pow(std::pow(2 * A, F.degree()) * Nl * Nl, 2.0 * (m - 1)) *
               delta_module_complex(F, delta);
  if (rhs >= 1) return RealnessOutcome::inconclusive;
  // The contrapositive fires: xi must be exactly totally real.
  if (!F.is_totally_real_element(xi))
    throw FieldError("realness_certificate: unsound certificate (non-real xi)");
  return RealnessOutcome::totally_real_proven;
}

}  // namespace gl2lab
