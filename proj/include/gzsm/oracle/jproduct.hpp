#pragma once

// The exact integer J(d1, d2) = prod (j(tau_1) - j(tau_2)) over all pairs
// of ideal classes of the two orders, computed by high-precision evaluation
// and verified integer rounding, with adaptive precision: the working
// precision doubles until two consecutive rounds produce the same integer
// with rounding gap below 1/4.

#include <optional>
#include <stdexcept>
#include <vector>

#include "gzsm/arith/factor.hpp"
#include "gzsm/oracle/jfunction.hpp"
#include "gzsm/quadratic/disc.hpp"
#include "gzsm/quadratic/forms.hpp"

namespace gzsm {

// The rounded value failed to stabilize as an integer.
struct NonIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A factor above the trial-division bound survived.
struct CofactorError : std::runtime_error {
  Int cofactor;
  explicit CofactorError(Int c)
      : std::runtime_error("cofactor above the factor bound remains"), cofactor(std::move(c)) {}
};

struct JRounding {
  Int value;
  bool ok;  // real part within 1/4 of the integer, imaginary within 1/4
};

// One evaluation of the full product at fixed precision.
inline JRounding j_product_at(const Disc& D1, const Disc& D2, long prec_bits) {
  mpfr_prec_t P = static_cast<mpfr_prec_t>(prec_bits);
  std::vector<BigComplex> j1, j2;
  for (const QuadForm& F : reduced_forms(D1.d))
    j1.push_back(j_invariant(D1.d, F.a, F.b, prec_bits));
  for (const QuadForm& F : reduced_forms(D2.d))
    j2.push_back(j_invariant(D2.d, F.a, F.b, prec_bits));

  BigComplex prod{BigFloat::from_long(1, P), BigFloat(P)};
  for (const BigComplex& x : j1)
    for (const BigComplex& y : j2) prod = prod * (x - y);

  Int rounded = round_bf(prod.re);
  BigFloat quarter = pow2_bf(-2, 64);
  // An integer rounded from a P-bit float is exactly representable in P bits.
  bool ok = abs_bf(prod.re - BigFloat::from_int(rounded, P)) < quarter &&
            abs_bf(prod.im) < quarter;
  return {rounded, ok};
}

// Starting precision: a margin per class pair covering the magnitude of the
// larger j-value, rounded up to a multiple of 1024.
inline long j_product_start_prec(const Disc& D1, const Disc& D2) {
  double bits = 128;
  std::vector<double> m1, m2;
  const double log2e = 1.4426950408889634;
  for (const QuadForm& F : reduced_forms(D1.d))
    m1.push_back(M_PI * std::sqrt(mpz_get_d(Int(-D1.d).get_mpz_t())) / mpz_get_d(F.a.get_mpz_t()) * log2e);
  for (const QuadForm& F : reduced_forms(D2.d))
    m2.push_back(M_PI * std::sqrt(mpz_get_d(Int(-D2.d).get_mpz_t())) / mpz_get_d(F.a.get_mpz_t()) * log2e);
  for (double x : m1)
    for (double y : m2) bits += (x > y ? x : y) + 8;
  long p = static_cast<long>(bits);
  return ((p + 1023) / 1024) * 1024;
}

struct JProduct {
  Int value;
  long prec_bits;  // precision at which the value stabilized
};

inline JProduct j_product(const Disc& D1, const Disc& D2) {
  if (D1.d == D2.d)
    throw std::invalid_argument("j_product: equal discriminants vanish identically");
  long P = j_product_start_prec(D1, D2);
  std::optional<JRounding> prev;
  for (int attempt = 0; attempt < 12; ++attempt) {
    JRounding cur = j_product_at(D1, D2, P);
    if (cur.ok && prev && prev->ok && prev->value == cur.value)
      return {cur.value, P};
    prev = cur;
    P *= 2;
  }
  throw NonIntegralError("j_product: value failed to stabilize");
}

// Factor n completely by trial division over primes <= bound; the cofactor
// must come out as a unit.
inline Factorization factor_smooth(const Int& n, const Int& bound) {
  if (n == 0) throw std::invalid_argument("factor_smooth: zero");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  for (Int p = 2; p <= bound && m > 1; p = p == 2 ? Int(3) : p + 2) {
    if (!is_prime(p)) continue;
    long v = 0;
    while (divides(p, m)) {
      m = divide_exact(m, p);
      ++v;
    }
    if (v > 0) f.factors.emplace_back(p, v);
  }
  if (m != 1) throw CofactorError(m);
  return f;
}

// Every prime dividing J(d1, d2) divides one of the slot numbers
// (d1 d2 - x^2)/4 <= d1 d2 / 4, so trial division up to that bound must
// exhaust the factorization.
inline Factorization full_factor_J(const Disc& D1, const Disc& D2, const Int& J) {
  Int bound = (D1.d * D2.d) / 4;  // both negative, so the product is positive
  return factor_smooth(J, bound);
}

// Valuation of J^(8 / (w1 w2)) at ell, as an exact rational.
inline Rat v_J_oracle(const Disc& D1, const Disc& D2, const Int& ell) {
  JProduct J = j_product(D1, D2);
  long v = valuation(J.value, ell);
  return make_rat(Int(8 * v), D1.w * D2.w);
}

}  // namespace gzsm
