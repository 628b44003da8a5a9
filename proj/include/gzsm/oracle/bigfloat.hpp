#pragma once

// RAII wrappers around MPFR: arbitrary-precision reals and rectangular
// complex numbers, with just the operations the modular-function evaluation
// needs.  Every binary operation rounds to the larger operand precision.

#include <mpfr.h>

#include <stdexcept>
#include <utility>

#include "gzsm/arith/int.hpp"

namespace gzsm {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) {
    if (prec < MPFR_PREC_MIN) throw std::invalid_argument("BigFloat: precision too small");
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static BigFloat from_int(const Int& z, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat from_long(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t prec_of(const BigFloat& a, const BigFloat& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(prec_of(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(prec_of(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(prec_of(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(prec_of(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat operator*(const BigFloat& a, const Int& z) {
  BigFloat r(a.prec());
  mpfr_mul_z(r.raw(), a.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }

inline BigFloat abs_bf(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sqrt_bf(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat exp_bf(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat cos_bf(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sin_bf(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat pi_bf(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
// 2^e as a BigFloat, e possibly negative -- exact.
inline BigFloat pow2_bf(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

inline double to_double(const BigFloat& a) { return mpfr_get_d(a.raw(), MPFR_RNDN); }

// Nearest integer.
inline Int round_bf(const BigFloat& a) {
  Int z;
  mpfr_get_z(z.get_mpz_t(), a.raw(), MPFR_RNDN);
  return z;
}

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigComplex& a, const Int& z) { return {a.re * z, a.im * z}; }

inline BigFloat abs_sq(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

inline BigComplex reciprocal(const BigComplex& a) {
  BigFloat n = abs_sq(a);
  return {a.re / n, -(a.im / n)};
}

}  // namespace gzsm
