#include "gl2lab/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "gl2lab/enumerate.hpp"

namespace gl2lab {

namespace {

long double rat_ld(const Rat& r) {
  // mpq_get_d rounds through double; split num/den for a hair more headroom.
  return static_cast<long double>(mpz_get_d(r.get_num_mpz_t())) /
         static_cast<long double>(mpz_get_d(r.get_den_mpz_t()));
}

Int isqrt_exact(const Int& v, bool* exact) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (exact) *exact = (r * r == v);
  return r;
}

std::vector<std::pair<Int, int>> factor_integer(Int v) {
  std::vector<std::pair<Int, int>> out;
  v = abs(v);
  if (v <= 1) return out;
  for (Int d = 2; d * d <= v && d < 2000000; d += (d == 2 ? 1 : 2)) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (v > 1) {
    if (mpz_probab_prime_p(v.get_mpz_t(), 30) == 0)
      throw FieldError("factor_integer: composite cofactor beyond trial bound");
    out.emplace_back(v, 1);
  }
  return out;
}

}  // namespace

// --- FieldElement ---------------------------------------------------------

FieldElement FieldElement::operator+(const FieldElement& o) const {
  QVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return {F_, c};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  QVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return {F_, c};
}
FieldElement FieldElement::operator-() const {
  QVec c(coords_);
  for (auto& x : c) x = -x;
  return {F_, c};
}
FieldElement FieldElement::operator*(const Rat& s) const {
  QVec c(coords_);
  for (auto& x : c) x *= s;
  return {F_, c};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  const int n = F_->n_;
  QVec out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (coords_[i] == 0) continue;
    const QMat& Mi = F_->mult_[i];
    for (int k = 0; k < n; ++k) {
      Rat acc = 0;
      for (int j = 0; j < n; ++j)
        if (o.coords_[j] != 0) acc += Mi[k][j] * o.coords_[j];
      out[k] += coords_[i] * acc;
    }
  }
  return {F_, out};
}

FieldElement FieldElement::inverse() const {
  const int n = F_->n_;
  QMat M = qmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    if (coords_[i] != 0)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) M[k][j] += coords_[i] * F_->mult_[i][k][j];
  QVec rhs = F_->one().coords();
  QVec sol = qmat_solve(M, rhs);
  if (sol.empty()) throw FieldError("inverse of zero element");
  return {F_, sol};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator<(const FieldElement& o) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    int c = mpq_cmp(coords_[i].get_mpq_t(), o.coords_[i].get_mpq_t());
    if (c != 0) return c < 0;
  }
  return false;
}

FieldElement FieldElement::pow(long k) const {
  FieldElement base = *this;
  if (k < 0) {
    base = base.inverse();
    k = -k;
  }
  FieldElement acc = F_->one();
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Rat FieldElement::norm() const {
  const int n = F_->n_;
  QMat M = qmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    if (coords_[i] != 0)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) M[k][j] += coords_[i] * F_->mult_[i][k][j];
  return qmat_det(M);
}

Rat FieldElement::trace() const {
  const int n = F_->n_;
  Rat t = 0;
  for (int i = 0; i < n; ++i)
    if (coords_[i] != 0)
      for (int k = 0; k < n; ++k) t += coords_[i] * F_->mult_[i][k][k];
  return t;
}

bool FieldElement::is_integral() const {
  for (const auto& x : coords_)
    if (x.get_den() != 1) return false;
  return true;
}

bool FieldElement::is_rational() const {
  // Rational iff the power-basis expansion has zero higher coefficients.
  QVec p = F_->basis_to_power(coords_);
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0) return false;
  return true;
}

Rat FieldElement::as_rational() const {
  QVec p = F_->basis_to_power(coords_);
  return p.empty() ? Rat(0) : p[0];
}

CC NumberField::eval_at_root(const QVec& power_coords, CC root) {
  CC acc(0.0L, 0.0L);
  for (std::size_t i = power_coords.size(); i-- > 0;)
    acc = acc * root + CC(rat_ld(power_coords[i]), 0.0L);
  return acc;
}

CC FieldElement::embed(int v) const {
  return NumberField::eval_at_root(F_->basis_to_power(coords_), F_->arch_roots_[v]);
}

long double FieldElement::abs_embed(int v) const { return std::abs(embed(v)); }

double FieldElement::module(int v) const {
  long double a = abs_embed(v);
  return static_cast<double>(F_->arch_degree(v) == 2 ? a * a : a);
}

double FieldElement::module_infty() const {
  long double acc = 1;
  for (int v = 0; v < F_->num_arch_places(); ++v) {
    long double a = abs_embed(v);
    acc *= (F_->arch_degree(v) == 2 ? a * a : a);
  }
  return static_cast<double>(acc);
}

std::string FieldElement::str() const { return qvec_str(coords_); }

// --- FractionalIdeal ------------------------------------------------------

FractionalIdeal::FractionalIdeal(const NumberField* F, ZMat hnf, Int den)
    : F_(F), hnf_(std::move(hnf)), den_(std::move(den)) {
  normalize();
}

void FractionalIdeal::normalize() {
  hnf_ = hnf_rows(hnf_);
  if (hnf_.size() != static_cast<std::size_t>(F_->n_))
    throw FieldError("ideal is not full rank (zero ideal unsupported)");
  if (den_ < 0) den_ = -den_;
  Int g = den_;
  for (auto& row : hnf_)
    for (auto& x : row) g = gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& row : hnf_)
      for (auto& x : row) x /= g;
  }
}

Rat FractionalIdeal::norm() const {
  Int d = abs(zmat_det(hnf_));
  Rat r(d);
  Int dn = 1;
  for (int i = 0; i < F_->n_; ++i) dn *= den_;
  return r / Rat(dn);
}

bool FractionalIdeal::contains(const FieldElement& x) const {
  // x in (1/den) L  <=>  den*x in L.
  QVec w(x.coords());
  for (auto& c : w) c *= Rat(den_);
  // Solve u * hnf = w over Q left-to-right (hnf is in row echelon form with
  // pivot of row i in column i), then check integrality.
  const int n = F_->n_;
  QVec u(n, Rat(0));
  for (int col = 0; col < n; ++col) {
    Rat acc = w[col];
    for (int i = 0; i < col; ++i) acc -= u[i] * Rat(hnf_[i][col]);
    Rat pivot(hnf_[col][col]);
    Rat q = acc / pivot;
    if (q.get_den() != 1) return false;
    u[col] = q;
  }
  return true;
}

bool FractionalIdeal::contains(const FractionalIdeal& other) const {
  for (const auto& e : other.basis_elements())
    if (!contains(e)) return false;
  return true;
}

bool FractionalIdeal::operator==(const FractionalIdeal& o) const {
  return den_ == o.den_ && hnf_ == o.hnf_;
}

std::vector<FieldElement> FractionalIdeal::basis_elements() const {
  std::vector<FieldElement> out;
  for (const auto& row : hnf_) {
    QVec c(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) c[j] = Rat(row[j], den_);
    out.emplace_back(F_, c);
  }
  return out;
}

FractionalIdeal FractionalIdeal::operator*(const FractionalIdeal& o) const {
  auto a = basis_elements(), b = o.basis_elements();
  ZMat rows;
  Int den = den_ * o.den_;
  for (const auto& x : a)
    for (const auto& y : b) {
      FieldElement p = x * y;
      QVec c = p.coords();
      ZVec r(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) {
        Rat v = c[j] * Rat(den);
        assert(v.get_den() == 1);
        r[j] = v.get_num();
      }
      rows.push_back(std::move(r));
    }
  return FractionalIdeal(F_, rows, den);
}

FractionalIdeal FractionalIdeal::operator+(const FractionalIdeal& o) const {
  Int den = lcm(den_, o.den_);
  ZMat rows;
  Int fa = den / den_, fb = den / o.den_;
  for (const auto& r : hnf_) {
    ZVec v(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) v[j] = r[j] * fa;
    rows.push_back(std::move(v));
  }
  for (const auto& r : o.hnf_) {
    ZVec v(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) v[j] = r[j] * fb;
    rows.push_back(std::move(v));
  }
  return FractionalIdeal(F_, rows, den);
}

FractionalIdeal FractionalIdeal::intersect(const FractionalIdeal& o) const {
  Int den = lcm(den_, o.den_);
  Int fa = den / den_, fb = den / o.den_;
  const int n = F_->n_;
  // Kernel of (u, v) -> u*A - v*B, columns of the stacked transpose.
  ZMat M(n, ZVec(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M[j][i] = hnf_[i][j] * fa;        // A^T
      M[j][n + i] = -o.hnf_[i][j] * fb;  // -B^T
    }
  ZMat ker = z_right_kernel(M);
  ZMat rows;
  for (const auto& k : ker) {
    ZVec x(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x[j] += k[i] * hnf_[i][j] * fa;
    rows.push_back(std::move(x));
  }
  return FractionalIdeal(F_, rows, den);
}

FractionalIdeal FractionalIdeal::inverse() const {
  const int n = F_->n_;
  // Invert the integral part I = hnf_, then scale by den_.
  Int Nm = abs(zmat_det(hnf_));
  // Solve for z in o with z * b_r in Nm * o for every basis element b_r of I.
  // Stack multiplication-by-b_r matrices.
  auto belts = FractionalIdeal(F_, hnf_, Int(1)).basis_elements();
  ZMat C(n * n, ZVec(n));
  for (int r = 0; r < n; ++r) {
    // Column-action matrix of multiplication by belts[r].
    for (int j = 0; j < n; ++j) {
      FieldElement prod = belts[r] * F_->element([&] {
        QVec e(n, Rat(0));
        e[j] = 1;
        return e;
      }());
      for (int k = 0; k < n; ++k) {
        Rat v = prod.coords()[k];
        assert(v.get_den() == 1);
        C[r * n + k][j] = v.get_num();
      }
    }
  }
  // Kernel of [C | Nm*Id] over Z, project z-part.
  ZMat M(n * n, ZVec(n + n * n, Int(0)));
  for (int i = 0; i < n * n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = C[i][j];
    M[i][n + i] = Nm;
  }
  ZMat ker = z_right_kernel(M);
  ZMat rows;
  for (const auto& k : ker) {
    ZVec z(k.begin(), k.begin() + n);
    rows.push_back(std::move(z));
  }
  FractionalIdeal inv_integral(F_, rows, Nm);  // I^{-1}
  // a = I/den  =>  a^{-1} = den * I^{-1}.
  ZMat scaled = inv_integral.hnf_;
  for (auto& row : scaled)
    for (auto& x : row) x *= den_;
  return FractionalIdeal(F_, scaled, inv_integral.den_);
}

FractionalIdeal FractionalIdeal::pow(long k) const {
  FractionalIdeal base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  FractionalIdeal acc = F_->ring_of_integers();
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

FractionalIdeal FractionalIdeal::scale(const FieldElement& x) const {
  return *this * F_->principal_ideal(x);
}

std::string FractionalIdeal::str() const {
  std::ostringstream os;
  os << "(1/" << den_.get_str() << ")[";
  for (std::size_t i = 0; i < hnf_.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < hnf_[i].size(); ++j) {
      if (j) os << " ";
      os << hnf_[i][j].get_str();
    }
  }
  os << "]";
  return os.str();
}

// --- ResidueField ----------------------------------------------------------

ResidueField::ResidueField(const NumberField* F, const PrimeIdeal& P)
    : F_(F), p_(P.p.get_ui()), g_(P.gbar), q_(P.norm) {
  if (P.e > 1 && P.f > 1)
    throw FieldError("residue field requires the factor polynomial");
}

FpPoly ResidueField::reduce(const FieldElement& x) const {
  QVec pw = F_->basis_to_power(x.coords());
  std::vector<Int> num(pw.size());
  Int p(static_cast<unsigned long>(p_));
  for (std::size_t i = 0; i < pw.size(); ++i) {
    Int den = pw[i].get_den();
    if (den % p == 0) throw FieldError("element not integral at p");
    // num/den mod p
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw FieldError("residue reduction failed");
    num[i] = (pw[i].get_num() % p) * dinv % p;
  }
  FpPoly r = fp_reduce(num, p_);
  return fp_mod(r, g_, p_);
}

FpPoly ResidueField::mul(const FpPoly& a, const FpPoly& b) const {
  return fp_mod(fp_mul(a, b, p_), g_, p_);
}

FpPoly ResidueField::pow(FpPoly a, Int e) const {
  FpPoly acc{1};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool ResidueField::is_square(const FpPoly& a) const {
  if (a.empty()) return true;
  FpPoly r = pow(a, (q_ - 1) / 2);
  return r.size() == 1 && r[0] == 1;
}

// --- NumberField: construction ---------------------------------------------

std::shared_ptr<const NumberField> NumberField::make(const std::vector<Int>& poly) {
  auto F = std::shared_ptr<NumberField>(new NumberField());
  F->init(poly, nullptr);
  return F;
}

std::shared_ptr<const NumberField> NumberField::make(const std::vector<Int>& poly,
                                                     const QMat& basis) {
  auto F = std::shared_ptr<NumberField>(new NumberField());
  F->init(poly, &basis);
  return F;
}

void NumberField::init(const std::vector<Int>& poly, const QMat* basis_opt) {
  poly_ = poly;
  while (!poly_.empty() && poly_.back() == 0) poly_.pop_back();
  n_ = static_cast<int>(poly_.size()) - 1;
  if (n_ < 1) throw FieldError("defining polynomial must be nonconstant");
  if (n_ > 4) throw FieldError("degree > 4 not supported");
  if (poly_.back() != 1) throw FieldError("defining polynomial must be monic");

  QVec qc(poly_.size());
  for (std::size_t i = 0; i < poly_.size(); ++i) qc[i] = Rat(poly_[i]);
  QPoly f(qc);
  if (n_ > 1 && !qpoly_is_irreducible_over_Q(f))
    throw FieldError("defining polynomial is reducible over Q");

  if (n_ == 1) {
    poly_disc_ = 1;
  } else {
    Rat d = qpoly_discriminant(f);
    assert(d.get_den() == 1);
    poly_disc_ = d.get_num();
  }

  // Integral basis.
  if (basis_opt) {
    basis_ = *basis_opt;
    if (static_cast<int>(basis_.size()) != n_)
      throw FieldError("supplied basis has wrong size");
  } else {
    bool power_ok = true;
    for (const auto& [p, e] : factor_integer(poly_disc_)) {
      if (e >= 2 && !dedekind_p_maximal(poly_, p.get_ui())) {
        power_ok = false;
        break;
      }
    }
    if (!power_ok)
      throw FieldError("Z[alpha] is not maximal; supply an integral basis");
    basis_ = qmat_identity(n_);
  }
  basis_inv_ = qmat_inverse(basis_);

  // Multiplication tensor over the integral basis.
  auto mul_power = [&](const QVec& a, const QVec& b) {
    // product of two power-basis coordinate vectors, reduced mod f
    QPoly pa(a), pb(b), q, r;
    QPoly prod = pa * pb;
    QPoly::divmod(prod, f, q, r);
    QVec out(n_, Rat(0));
    for (int i = 0; i <= r.degree(); ++i) out[i] = r.c[i];
    return out;
  };
  mult_.assign(n_, qmat_zero(n_, n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      QVec prod_pw = mul_power(basis_[i], basis_[j]);
      QVec prod_basis = power_to_basis(prod_pw);
      for (int k = 0; k < n_; ++k) {
        mult_[i][k][j] = prod_basis[k];
        if (basis_opt == nullptr) continue;
      }
    }
  // With a supplied basis, verify it is closed under multiplication.
  if (basis_opt) {
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        for (int j = 0; j < n_; ++j)
          if (mult_[i][k][j].get_den() != 1)
            throw FieldError("supplied basis is not an order");
  }

  compute_embeddings();

  // Field discriminant.
  if (basis_opt) {
    QMat tf = qmat_zero(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        FieldElement ui(this, [&] {
          QVec e(n_, Rat(0));
          e[i] = 1;
          return e;
        }());
        FieldElement uj(this, [&] {
          QVec e(n_, Rat(0));
          e[j] = 1;
          return e;
        }());
        tf[i][j] = (ui * uj).trace();
      }
    Rat d = qmat_det(tf);
    assert(d.get_den() == 1);
    disc_ = d.get_num();
    Int idx2q = poly_disc_ / disc_;
    bool exact = false;
    index_ = isqrt_exact(idx2q, &exact);
    if (!exact) throw FieldError("supplied basis inconsistent with polynomial");
  } else {
    disc_ = poly_disc_;
    index_ = 1;
  }

  o_ = FractionalIdeal(this, zmat_identity(n_), Int(1));

  cF_ = 1.0;
  for (int i = 0; i < n_; ++i) {
    FieldElement ui(this, [&] {
      QVec e(n_, Rat(0));
      e[i] = 1;
      return e;
    }());
    for (int v = 0; v < num_arch_places(); ++v)
      cF_ = std::max(cF_, static_cast<double>(ui.abs_embed(v)));
  }

  compute_torsion();
  if (unit_rank() >= 2)
    throw FieldError("unit rank >= 2 not supported");
  compute_units();
  compute_class_group();
}

void NumberField::compute_embeddings() {
  if (n_ == 1) {
    r1_ = 1;
    r2_ = 0;
    arch_roots_ = {CC(rat_ld(Rat(-poly_[0])), 0.0L)};
    return;
  }
  // Durand-Kerner.
  std::vector<CC> z(n_);
  for (int i = 0; i < n_; ++i) z[i] = std::pow(CC(0.4L, 0.9L), i + 1);
  auto eval = [&](CC x) {
    CC acc(0.0L, 0.0L);
    for (int i = n_; i >= 0; --i) acc = acc * x + CC(static_cast<long double>(mpz_get_d(poly_[i].get_mpz_t())), 0.0L);
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double moved = 0;
    for (int i = 0; i < n_; ++i) {
      CC denom(1.0L, 0.0L);
      for (int j = 0; j < n_; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      CC step = eval(z[i]) / denom;
      z[i] -= step;
      moved += std::abs(step);
    }
    if (moved < 1e-30L) break;
  }
  // Newton polish.
  auto deriv = [&](CC x) {
    CC acc(0.0L, 0.0L);
    for (int i = n_; i >= 1; --i)
      acc = acc * x + CC(static_cast<long double>(i) * mpz_get_d(poly_[i].get_mpz_t()), 0.0L);
    return acc;
  };
  for (int i = 0; i < n_; ++i)
    for (int it = 0; it < 8; ++it) z[i] -= eval(z[i]) / deriv(z[i]);

  std::vector<long double> reals;
  std::vector<CC> comps;
  for (const auto& r : z) {
    if (std::fabs(static_cast<double>(r.imag())) < 1e-10 * (1.0 + std::abs(static_cast<double>(r.real())))) {
      reals.push_back(r.real());
    } else if (r.imag() > 0) {
      comps.push_back(r);
    }
  }
  r1_ = static_cast<int>(reals.size());
  r2_ = static_cast<int>(comps.size());
  if (r1_ + 2 * r2_ != n_) throw FieldError("embedding classification failed");
  std::sort(reals.begin(), reals.end());
  std::sort(comps.begin(), comps.end(), [](const CC& a, const CC& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  arch_roots_.clear();
  for (auto r : reals) arch_roots_.emplace_back(r, 0.0L);
  for (auto c : comps) arch_roots_.push_back(c);
}

QVec NumberField::power_to_basis(const QVec& power_coords) const {
  QVec out(n_, Rat(0));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) out[j] += power_coords[i] * basis_inv_[i][j];
  return out;
}

QVec NumberField::basis_to_power(const QVec& basis_coords) const {
  QVec out(n_, Rat(0));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) out[j] += basis_coords[i] * basis_[i][j];
  return out;
}

FieldElement NumberField::element(QVec coords) const {
  assert(static_cast<int>(coords.size()) == n_);
  return {this, std::move(coords)};
}
FieldElement NumberField::zero() const { return {this, QVec(n_, Rat(0))}; }
FieldElement NumberField::one() const { return from_rational(Rat(1)); }
FieldElement NumberField::from_rational(const Rat& r) const {
  QVec p(n_, Rat(0));
  p[0] = r;
  return {this, power_to_basis(p)};
}
FieldElement NumberField::generator() const {
  QVec p(n_, Rat(0));
  if (n_ == 1)
    p[0] = Rat(-poly_[0]);
  else
    p[1] = 1;
  return {this, power_to_basis(p)};
}
FieldElement NumberField::from_power_basis(const QVec& power_coords) const {
  return {this, power_to_basis(power_coords)};
}

// --- torsion and units ------------------------------------------------------

void NumberField::compute_torsion() {
  // Roots of unity: integral elements with every |x_v| = 1.
  std::vector<double> bounds(num_arch_places(), 1.0);
  std::vector<FieldElement> cands = elements_in_box(o_, bounds, 100000, 1e-6);
  std::vector<FieldElement> roots;
  for (const auto& x : cands) {
    if (abs(x.norm()) != 1) continue;
    // Is x a root of unity? Orders divide 12 in degree <= 4.
    FieldElement p = x;
    bool is_root = false;
    for (int k = 1; k <= 12; ++k) {
      if (p == one()) {
        is_root = true;
        break;
      }
      p = p * x;
    }
    if (is_root) roots.push_back(x);
  }
  torsion_order_ = static_cast<int>(roots.size());
  if (torsion_order_ < 2) throw FieldError("torsion computation failed (missing -1)");
  // Generator: element of maximal order.
  auto order_of = [&](const FieldElement& x) {
    FieldElement p = x;
    for (int k = 1; k <= 12; ++k) {
      if (p == one()) return k;
      p = p * x;
    }
    return 0;
  };
  torsion_gen_ = from_rational(Rat(-1));
  int best = 2;
  for (const auto& x : roots) {
    int o = order_of(x);
    if (o > best) {
      best = o;
      torsion_gen_ = x;
    }
  }
  if (best != torsion_order_) {
    // Torsion must be cyclic; the max order equals the group size.
    torsion_order_ = best;
  }
}

namespace {
// Minimal (x, y) with x^2 - m y^2 = +-1, via the continued fraction of
// sqrt(m); m > 1 squarefree.
std::pair<Int, Int> pell_cf(const Int& m) {
  Int a0 = isqrt_exact(m, nullptr);
  Int P = 0, Q = 1, a = a0;
  Int pm1 = 1, p0 = a0, qm1 = 0, q0 = 1;
  for (int step = 0; step < 100000; ++step) {
    P = a * Q - P;
    Q = (m - P * P) / Q;
    a = (a0 + P) / Q;
    Int p1 = a * p0 + pm1, q1 = a * q0 + qm1;
    if (Q == 1) return {p1, q1};  // end of period
    pm1 = p0;
    p0 = p1;
    qm1 = q0;
    q0 = q1;
  }
  throw FieldError("Pell continued fraction did not terminate");
}
}  // namespace

void NumberField::compute_units() {
  fund_units_.clear();
  log_unit_covering_ = 0.0;
  if (unit_rank() == 0) return;

  FieldElement u0 = one();
  if (n_ == 2 && r1_ == 2) {
    // Real quadratic: Pell via continued fractions, then refine the index.
    Int D = poly_disc_;
    // alpha = (-b + sqrt(D))/2 with f = x^2 + b x + c.
    Int b = poly_[1];
    // Squarefree part of D.
    Int m = 1, s = 1;
    for (const auto& [p, e] : factor_integer(D)) {
      for (int i = 0; i + 1 < e; i += 2) s *= p;
      if (e % 2 == 1) m *= p;
    }
    auto [x, y] = pell_cf(m);
    // sqrt(m) = (2*alpha + b)/s as a field element.
    FieldElement sqrt_m = (generator() * Rat(2) + from_rational(Rat(b))) * Rat(1, s.get_si());
    u0 = from_rational(Rat(x)) + sqrt_m * Rat(y);
    if (abs(u0.norm()) != 1) throw FieldError("Pell unit has wrong norm");
  } else {
    // Unit-rank-1 field without real quadratic structure (totally imaginary
    // quartic): direct search with growing boxes.
    bool found = false;
    for (double B = 2; B <= 64 && !found; B *= 2) {
      std::vector<double> bounds(num_arch_places(), B);
      auto cands = elements_in_box(o_, bounds, 2000000, 1e-9);
      long double best_len = 1e30L;
      for (const auto& xx : cands) {
        if (abs(xx.norm()) != 1) continue;
        long double len = 0;
        for (int v = 0; v < num_arch_places(); ++v)
          len = std::max(len, std::fabs(std::log(xx.abs_embed(v))));
        if (len > 1e-9L && len < best_len) {
          best_len = len;
          u0 = xx;
          found = true;
        }
      }
    }
    if (!found) throw FieldError("fundamental unit search failed");
  }

  // Shrink u0 to the fundamental unit: look for k-th roots, k = 2, 3.
  bool improved = true;
  while (improved) {
    improved = false;
    for (int k : {2, 3}) {
      long double bound = 0;
      for (int v = 0; v < num_arch_places(); ++v)
        bound = std::max(bound, std::pow(u0.abs_embed(v), 1.0L / k));
      std::vector<double> bounds(num_arch_places(), static_cast<double>(bound) * 1.01 + 0.01);
      auto cands = elements_in_box(o_, bounds, 2000000, 1e-9);
      for (const auto& e : cands) {
        if (abs(e.norm()) != 1) continue;
        FieldElement ek = e.pow(k);
        if (ek == u0 || ek == -u0) {
          long double len = 0, len0 = 0;
          for (int v = 0; v < num_arch_places(); ++v) {
            len = std::max(len, std::fabs(std::log(e.abs_embed(v))));
            len0 = std::max(len0, std::fabs(std::log(u0.abs_embed(v))));
          }
          if (len > 1e-9L && len < len0 - 1e-12L) {
            u0 = e;
            improved = true;
            break;
          }
        }
      }
      if (improved) break;
    }
  }
  // Orient so |u0| > 1 at the first place.
  if (u0.abs_embed(0) < 1) u0 = u0.inverse();
  fund_units_ = {u0};

  // Sup-norm covering radius of the rank-1 log-unit lattice.
  long double w = 0;
  for (int v = 0; v < num_arch_places(); ++v)
    w = std::max(w, std::fabs(std::log(u0.abs_embed(v))));
  log_unit_covering_ = static_cast<double>(w / 2);
}

std::vector<FieldElement> NumberField::units_in_window(int exp_bound) const {
  std::vector<FieldElement> out;
  FieldElement zeta = torsion_gen_;
  for (int a = 0; a < torsion_order_; ++a) {
    FieldElement t = zeta.pow(a);
    if (fund_units_.empty()) {
      out.push_back(t);
    } else {
      for (int k = -exp_bound; k <= exp_bound; ++k)
        out.push_back(t * fund_units_[0].pow(k));
    }
  }
  return out;
}

bool NumberField::is_unit(const FieldElement& x) const {
  return x.is_integral() && abs(x.norm()) == 1;
}

bool NumberField::is_unit_square(const FieldElement& x) const {
  if (!is_unit(x)) throw FieldError("is_unit_square: not a unit");
  // Decompose x = zeta^a * eps^k.
  long k = 0;
  FieldElement core = x;
  if (!fund_units_.empty()) {
    long double le = std::log(fund_units_[0].abs_embed(0));
    long double lx = std::log(x.abs_embed(0));
    k = std::lround(static_cast<double>(lx / le));
    core = x * fund_units_[0].pow(-k);
    // core should now be torsion.
  }
  int a = -1;
  FieldElement t = one();
  for (int i = 0; i < torsion_order_; ++i) {
    if (core == t) {
      a = i;
      break;
    }
    t = t * torsion_gen_;
  }
  if (a < 0) throw FieldError("unit decomposition failed");
  bool k_even = (k % 2 == 0);
  bool a_solvable = (a % 2 == 0) || (torsion_order_ % 2 == 1);
  return k_even && a_solvable;
}

// --- ideals -----------------------------------------------------------------

FractionalIdeal NumberField::ideal(const std::vector<FieldElement>& gens) const {
  ZMat rows;
  Int den = 1;
  for (const auto& g : gens)
    for (const auto& c : g.coords()) den = lcm(den, Int(c.get_den()));
  for (const auto& g : gens)
    for (int i = 0; i < n_; ++i) {
      FieldElement ui(this, [&] {
        QVec e(n_, Rat(0));
        e[i] = 1;
        return e;
      }());
      FieldElement prod = g * ui;
      ZVec r(n_);
      for (int j = 0; j < n_; ++j) {
        Rat v = prod.coords()[j] * Rat(den);
        assert(v.get_den() == 1);
        r[j] = v.get_num();
      }
      rows.push_back(std::move(r));
    }
  return FractionalIdeal(this, rows, den);
}

FractionalIdeal NumberField::principal_ideal(const FieldElement& x) const {
  if (x.is_zero()) throw FieldError("zero ideal");
  return ideal({x});
}

FractionalIdeal NumberField::ideal_scaled(const Rat& r) const {
  return principal_ideal(from_rational(r));
}

std::vector<PrimeIdeal> NumberField::primes_above(const Int& p) const {
  if (index_ % p == 0)
    throw FieldError("prime divides the index; unsupported");
  std::vector<PrimeIdeal> out;
  FpPoly fbar = fp_reduce(poly_, p.get_ui());
  auto factors = fp_factor(fbar, p.get_ui());
  for (const auto& fac : factors) {
    PrimeIdeal P;
    P.p = p;
    P.e = fac.multiplicity;
    P.f = static_cast<int>(fac.factor.size()) - 1;
    P.gbar = fac.factor;
    Int nrm = 1;
    for (int i = 0; i < P.f; ++i) nrm *= p;
    P.norm = nrm;
    // Ideal (p, g(alpha)); reduce g mod the defining polynomial first so the
    // inert case (deg g = n) evaluates correctly.
    QVec gcoeff(fac.factor.size());
    for (std::size_t i = 0; i < fac.factor.size(); ++i)
      gcoeff[i] = Rat(static_cast<unsigned long>(fac.factor[i]));
    QVec fcoeff(poly_.size());
    for (std::size_t i = 0; i < poly_.size(); ++i) fcoeff[i] = Rat(poly_[i]);
    QPoly q, rem;
    QPoly::divmod(QPoly(gcoeff), QPoly(fcoeff), q, rem);
    QVec gp(n_, Rat(0));
    for (int i = 0; i <= rem.degree(); ++i) gp[i] = rem.c[i];
    FieldElement galpha = from_power_basis(gp);
    std::vector<FieldElement> gens = {from_rational(Rat(p))};
    if (!galpha.is_zero()) gens.push_back(galpha);
    P.ideal = ideal(gens);
    out.push_back(std::move(P));
  }
  // Deterministic order.
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& A, const PrimeIdeal& B) {
    if (A.norm != B.norm) return A.norm < B.norm;
    return A.gbar < B.gbar;
  });
  return out;
}

void NumberField::compute_uniformizer(PrimeIdeal& P) const {
  if (!P.uniformizer.coords().empty()) return;
  double bound = 1.2 * std::pow(static_cast<double>(P.norm.get_d()), 1.0 / n_) *
                 std::exp(log_unit_covering_) * cF_ * n_;
  for (int attempt = 0; attempt < 6; ++attempt, bound *= 2) {
    std::vector<double> bounds(num_arch_places(), bound);
    auto cands = elements_in_box(P.ideal, bounds, 4000000, 1e-9);
    std::vector<FieldElement> ok;
    for (const auto& x : cands)
      if (valuation(x, P) == 1) ok.push_back(x);
    if (!ok.empty()) {
      std::sort(ok.begin(), ok.end(), [](const FieldElement& a, const FieldElement& b) {
        Rat na = abs(a.norm()), nb = abs(b.norm());
        if (na != nb) return na < nb;
        return a < b;
      });
      P.uniformizer = ok.front();
      return;
    }
  }
  throw FieldError("uniformizer search failed");
}

int NumberField::valuation(const FractionalIdeal& a, const PrimeIdeal& P) const {
  // v(a) = v(I) - n_p(den) * e where a = I/den.
  FractionalIdeal I(this, a.hnf_basis(), Int(1));
  int vden = 0;
  Int den = a.denominator();
  while (den % P.p == 0) {
    den /= P.p;
    ++vden;
  }
  int v = 0;
  FractionalIdeal power = P.ideal;
  while (power.contains(I)) {
    ++v;
    power = power * P.ideal;
    if (v > 64) throw FieldError("valuation runaway");
  }
  return v - vden * P.e;
}

int NumberField::valuation(const FieldElement& x, const PrimeIdeal& P) const {
  if (x.is_zero()) throw FieldError("valuation of zero");
  return valuation(principal_ideal(x), P);
}

std::vector<std::pair<PrimeIdeal, int>> NumberField::factor_ideal(const FractionalIdeal& a) const {
  std::vector<std::pair<PrimeIdeal, int>> out;
  Rat nm = a.norm();
  Int support = nm.get_num() * nm.get_den();
  for (const auto& [p, e] : factor_integer(support)) {
    (void)e;
    for (const auto& P : primes_above(p)) {
      int v = valuation(a, P);
      if (v != 0) out.emplace_back(P, v);
    }
  }
  return out;
}

// --- class group -------------------------------------------------------------

double NumberField::minkowski_bound() const {
  double nf = 1;
  for (int i = 2; i <= n_; ++i) nf *= i;
  double bound = nf / std::pow(static_cast<double>(n_), n_) *
                 std::pow(4.0 / M_PI, r2_) *
                 std::sqrt(std::fabs(disc_.get_d()));
  return bound;
}

bool NumberField::is_principal(const FractionalIdeal& a, FieldElement* generator) const {
  Rat nrm = a.norm();
  double target = std::fabs(nrm.get_d());
  double bound = 1.05 * std::exp(log_unit_covering_) * std::pow(target, 1.0 / n_);
  std::vector<double> bounds(num_arch_places(), bound);
  auto cands = elements_in_box(a, bounds, 4000000, 1e-9);
  std::sort(cands.begin(), cands.end());
  for (const auto& x : cands) {
    if (abs(x.norm()) == nrm) {
      if (generator) *generator = x;
      return true;
    }
  }
  return false;
}

void NumberField::compute_class_group() {
  class_reps_.clear();
  class_reps_.push_back(o_);
  double mb = minkowski_bound();
  if (mb < 2) return;
  // All integral ideals of norm <= mb: products of primes above p <= mb.
  std::vector<PrimeIdeal> primes;
  for (Int p = 2; p.get_d() <= mb; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (index_ % p == 0) throw FieldError("index prime below Minkowski bound");
    for (const auto& P : primes_above(p))
      if (P.norm.get_d() <= mb) primes.push_back(P);
  }
  std::vector<FractionalIdeal> ideals = {o_};
  for (const auto& P : primes) {
    std::vector<FractionalIdeal> next = ideals;
    for (const auto& I : ideals) {
      FractionalIdeal acc = I;
      while (true) {
        acc = acc * P.ideal;
        if (acc.norm().get_d() > mb) break;
        next.push_back(acc);
      }
    }
    ideals = next;
  }
  // Partition into classes.
  std::vector<FractionalIdeal> reps;
  for (const auto& I : ideals) {
    bool placed = false;
    for (const auto& R : reps) {
      FractionalIdeal q = I * R.inverse();
      if (is_principal(q)) {
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(I);
  }
  // Smallest-norm representative per class, principal class first.
  std::sort(reps.begin(), reps.end(), [](const FractionalIdeal& A, const FractionalIdeal& B) {
    Rat na = A.norm(), nb = B.norm();
    if (na != nb) return na < nb;
    return A.hnf_basis() < B.hnf_basis();
  });
  class_reps_.clear();
  for (const auto& R : reps) class_reps_.push_back(R);
  // The identity class representative should be o itself.
  if (!(class_reps_[0] == o_)) {
    for (std::size_t i = 0; i < class_reps_.size(); ++i)
      if (is_principal(class_reps_[i])) {
        std::swap(class_reps_[0], class_reps_[i]);
        break;
      }
    class_reps_[0] = o_;
  }
}

int NumberField::class_index_of(const FractionalIdeal& a) const {
  for (std::size_t i = 0; i < class_reps_.size(); ++i) {
    if (is_principal(a * class_reps_[i].inverse())) return static_cast<int>(i);
  }
  throw FieldError("class index not found");
}

// --- spec operations ----------------------------------------------------------

bool NumberField::is_totally_positive(const FieldElement& x) const {
  for (int v = 0; v < r1_; ++v)
    if (x.embed(v).real() <= 0) return false;
  return true;
}

FieldElement NumberField::unit_balance_unit(const FieldElement& x) const {
  if (x.is_zero()) throw FieldError("unit_balance of zero");
  if (n_ == 1) {
    // Sign normalization only.
    return x.coords()[0] < 0 ? from_rational(Rat(-1)) : one();
  }
  if (fund_units_.empty()) return one();
  const FieldElement& eps = fund_units_[0];
  int r = num_arch_places();
  std::vector<long double> t(r), w(r);
  long double logmod = 0;
  for (int v = 0; v < r; ++v) {
    long double lx = std::log(x.abs_embed(v));
    logmod += arch_degree(v) * lx;
    t[v] = lx;
    w[v] = std::log(eps.abs_embed(v));
  }
  for (int v = 0; v < r; ++v) t[v] -= logmod / n_;
  // minimize over integer k: max_v |t_v + k w_v|
  auto cost = [&](long k) {
    long double m = 0;
    for (int v = 0; v < r; ++v) m = std::max(m, std::fabs(t[v] + k * w[v]));
    return m;
  };
  // Continuous optimum is within |t|/|w|; scan a window.
  long double wmax = 0, tmax = 0;
  for (int v = 0; v < r; ++v) {
    wmax = std::max(wmax, std::fabs(w[v]));
    tmax = std::max(tmax, std::fabs(t[v]));
  }
  long k0 = static_cast<long>(std::ceil(static_cast<double>(tmax / wmax))) + 2;
  long best_k = 0;
  long double best = cost(0);
  for (long k = -k0; k <= k0; ++k)
    if (cost(k) < best - 1e-15L) {
      best = cost(k);
      best_k = k;
    }
  return eps.pow(best_k);
}

namespace {
QPoly minimal_polynomial(const NumberField& F, const FieldElement& w) {
  // Smallest monic polynomial with p(w) = 0, by incremental rank checks on
  // the powers of w.
  int n = F.degree();
  std::vector<QVec> pows;
  FieldElement p = F.one();
  pows.push_back(p.coords());
  for (int d = 1; d <= n; ++d) {
    p = p * w;
    pows.push_back(p.coords());
    // Solve sum_{i<d} c_i w^i = -w^d.
    QMat A = qmat_zero(n, d);
    QVec b(n);
    for (int row = 0; row < n; ++row) {
      for (int i = 0; i < d; ++i) A[row][i] = pows[i][row];
      b[row] = -pows[d][row];
    }
    // Least-structure exact solve: try full rank d system via normal equations
    // is inexact-free? Use rank checks: build augmented and do elimination.
    // Solve A c = b exactly if consistent.
    QMat Ab = A;
    for (int row = 0; row < n; ++row) Ab[row].push_back(b[row]);
    if (qmat_rank(A) == qmat_rank(Ab) && qmat_rank(A) == static_cast<std::size_t>(d)) {
      // consistent; extract c by elimination on a square subsystem
      // (take d independent rows)
      QMat As;
      QVec bs;
      std::size_t need = d;
      for (int row = 0; row < n && As.size() < need; ++row) {
        QMat test = As;
        test.push_back(A[row]);
        if (qmat_rank(test) > qmat_rank(As)) {
          As.push_back(A[row]);
          bs.push_back(b[row]);
        }
      }
      QVec c = qmat_solve(As, bs);
      QVec coeffs(d + 1);
      for (int i = 0; i < d; ++i) coeffs[i] = c[i];
      coeffs[d] = 1;
      return QPoly(coeffs);
    }
  }
  throw FieldError("minimal polynomial not found");
}
}  // namespace

QPoly minimal_polynomial_over_Q(const FieldElement& x) {
  return minimal_polynomial(x.field(), x);
}

SubfieldInfo NumberField::maximal_totally_real_subfield() const {
  SubfieldInfo info;
  if (r2_ == 0) {
    info.K = NumberField::make(poly_);
    info.generator_in_F = generator();
    info.m = 1;
    return info;
  }
  if (n_ == 2 || n_ == 3) {
    // Prime degree with a complex place: the only totally real subfield is Q.
    info.K = NumberField::make({Int(0), Int(1)});
    info.generator_in_F = one();
    info.m = n_;
    return info;
  }
  // Totally imaginary quartic: look for an integral w generating a real
  // quadratic subfield.
  FieldElement best;
  QPoly best_min;
  bool found = false;
  for (long c3 = 0; c3 <= 2 && !found; ++c3)
    for (long c2 = -2; c2 <= 2 && !found; ++c2)
      for (long c1 = -2; c1 <= 2 && !found; ++c1)
        for (long c0 = 0; c0 <= 1 && !found; ++c0) {
          QVec coords = {Rat(c0), Rat(c1), Rat(c2), Rat(c3)};
          FieldElement w = element(coords);
          if (w.is_rational()) continue;
          QPoly mp = minimal_polynomial(*this, w);
          if (mp.degree() != 2) continue;
          Rat disc = mp.at(1) * mp.at(1) - 4 * mp.at(0) * mp.at(2);
          if (disc <= 0) continue;
          best = w;
          best_min = mp;
          found = true;
        }
  if (found) {
    // Build K from the (integral, monic) minimal polynomial of w.
    std::vector<Int> kp(best_min.c.size());
    for (std::size_t i = 0; i < best_min.c.size(); ++i) {
      assert(best_min.c[i].get_den() == 1);
      kp[i] = best_min.c[i].get_num();
    }
    info.K = NumberField::make(kp);
    info.generator_in_F = best;
    info.m = 2;
    return info;
  }
  info.K = NumberField::make({Int(0), Int(1)});
  info.generator_in_F = one();
  info.m = 4;
  return info;
}

bool NumberField::is_totally_real_element(const FieldElement& x) const {
  if (r2_ == 0) return true;
  if (x.is_rational()) return true;
  SubfieldInfo sub = maximal_totally_real_subfield();
  if (sub.m == n_) return false;  // K = Q and x irrational
  // x in span{1, w, ..., w^{n/m - 1}}?
  int d = n_ / sub.m;
  QMat A = qmat_zero(n_, d);
  FieldElement p = one();
  for (int i = 0; i < d; ++i) {
    for (int row = 0; row < n_; ++row) A[row][i] = p.coords()[row];
    p = p * sub.generator_in_F;
  }
  QMat Ab = A;
  for (int row = 0; row < n_; ++row) Ab[row].push_back(x.coords()[row]);
  return qmat_rank(A) == qmat_rank(Ab);
}

std::vector<FieldElement> NumberField::elements_in_box(const FractionalIdeal& a,
                                                       const std::vector<double>& bounds,
                                                       std::uint64_t node_budget,
                                                       double slack) const {
  const int r = num_arch_places();
  assert(static_cast<int>(bounds.size()) == r);
  for (double b : bounds)
    if (!(b > 0)) return {};
  auto belts = a.basis_elements();
  // Real embedding matrix: n rows; a real place contributes one column, a
  // complex place two. Columns are pre-scaled by 1/bound so the search
  // region becomes a unit-ish ellipsoid.
  int cols = r1_ + 2 * r2_;
  Eigen::MatrixXd B(n_, cols);
  for (int i = 0; i < n_; ++i) {
    int c = 0;
    for (int v = 0; v < r; ++v) {
      CC z = belts[i].embed(v);
      double w = 1.0 / bounds[v];
      if (arch_degree(v) == 1) {
        B(i, c++) = static_cast<double>(z.real()) * w;
      } else {
        B(i, c++) = static_cast<double>(z.real()) * w;
        B(i, c++) = static_cast<double>(z.imag()) * w;
      }
    }
  }
  Eigen::MatrixXi U;
  Eigen::MatrixXd Bred = B;
  lll_reduce(Bred, &U);
  Eigen::MatrixXd gram = Bred * Bred.transpose();
  // Region: per place |x_v| <= bounds_v  =>  sum_v (|x_v|/bounds_v)^2 <= r.
  double radius2 = r * (1.0 + slack) + 1e-12;
  std::vector<FieldElement> out;
  fincke_pohst(gram, radius2, node_budget, [&](const std::vector<long>& coeff, double) {
    // Map back through the LLL transform.
    QVec c(n_, Rat(0));
    for (int i = 0; i < n_; ++i) {
      if (coeff[i] == 0) continue;
      for (int j = 0; j < n_; ++j) {
        if (U(i, j) == 0) continue;
        c[j] += Rat(coeff[i]) * Rat(U(i, j));
      }
    }
    QVec coords(n_, Rat(0));
    for (int j = 0; j < n_; ++j) {
      if (c[j] == 0) continue;
      for (int k = 0; k < n_; ++k) coords[k] += c[j] * belts[j].coords()[k];
    }
    FieldElement x(this, coords);
    for (int v = 0; v < r; ++v)
      if (static_cast<double>(x.abs_embed(v)) > bounds[v] * (1.0 + slack)) return;
    out.push_back(x);
    out.push_back(-x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string NumberField::str() const {
  std::ostringstream os;
  os << "NumberField(deg " << n_ << ", sig (" << r1_ << "," << r2_ << "), disc "
     << disc_.get_str() << ", h " << class_reps_.size() << ")";
  return os.str();
}

// --- modules ------------------------------------------------------------------

double module_at_arch(const FieldElement& x, int v) { return x.module(v); }

Rat module_at_finite(const NumberField& F, const FieldElement& x, const PrimeIdeal& P) {
  if (x.is_zero()) throw FieldError("module of zero at finite place");
  int v = F.valuation(x, P);
  Rat nrm(P.norm);
  Rat out = 1;
  if (v >= 0) {
    for (int i = 0; i < v; ++i) out /= nrm;
  } else {
    for (int i = 0; i < -v; ++i) out *= nrm;
  }
  return out;
}

}  // namespace gl2lab
