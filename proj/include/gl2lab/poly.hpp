#pragma once

// Dense univariate polynomials over Q, plus the small amount of mod-p
// machinery needed for degree <= 4 number fields: root finding, full
// factorization, and the Dedekind index test.

#include <cstdint>
#include <vector>

#include "gl2lab/exact.hpp"

namespace gl2lab {

// Coefficients ascending: p[i] is the coefficient of x^i.
struct QPoly {
  QVec c;

  QPoly() = default;
  explicit QPoly(QVec coeffs) : c(std::move(coeffs)) { trim(); }
  static QPoly from_int(const std::vector<long>& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = v[i];
    return QPoly(q);
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat lc() const { return c.empty() ? Rat(0) : c.back(); }
  Rat at(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& s) const;
  bool operator==(const QPoly& o) const { return c == o.c; }

  QPoly derivative() const;
  Rat eval(const Rat& x) const;

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
};

QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd
Rat qpoly_resultant(const QPoly& a, const QPoly& b);  // Sylvester determinant
Rat qpoly_discriminant(const QPoly& f);  // (-1)^{d(d-1)/2} Res(f,f')/lc

bool qpoly_is_irreducible_over_Q(const QPoly& f);  // degree <= 4 only

// --- mod-p polynomials, p a word-sized odd (or 2) prime -------------------

using FpPoly = std::vector<std::uint64_t>;  // ascending, reduced mod p

FpPoly fp_reduce(const std::vector<Int>& coeffs, std::uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p);
FpPoly fp_monic(FpPoly a, std::uint64_t p);
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, std::uint64_t p);
std::uint64_t fp_eval(const FpPoly& a, std::uint64_t x, std::uint64_t p);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  int multiplicity;
};

// Complete factorization of a monic polynomial of degree <= 4 over F_p.
// Root scan plus an O(p) quadratic-splitting pass; fine for the prime sizes
// this project meets.
std::vector<FpFactor> fp_factor(const FpPoly& f, std::uint64_t p);

// Dedekind's criterion: is Z[alpha] maximal at p, for f the minimal
// polynomial of alpha? (f monic integral.)
bool dedekind_p_maximal(const std::vector<Int>& f, std::uint64_t p);

}  // namespace gl2lab
