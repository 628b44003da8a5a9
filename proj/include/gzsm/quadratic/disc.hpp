#pragma once
// Imaginary quadratic discriminants with their derived data: conductor f,
// fundamental part (d = f^2 * d_fund), unit count w, and the l-depleted
// discriminant d * l^{-2 v_l(f)}.

#include <gzsm/arith/factor.hpp>
#include <gzsm/arith/int.hpp>

namespace gzsm {

struct Disc {
  Int d;       // < 0, congruent to 0 or 1 mod 4
  Int f;       // conductor
  Int d_fund;  // fundamental discriminant; d = f^2 * d_fund
  Int w;       // number of units in O_d: 6 iff d = -3, 4 iff d = -4, else 2

  bool operator==(const Disc& o) const { return d == o.d; }
};

inline bool is_discriminant(const Int& d) {
  if (d >= 0) return false;
  unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 4);
  return r == 0 || r == 1;
}

// Populates all derived fields.  Rejects d >= 0 and d = 2, 3 mod 4.
inline Disc make_disc(const Int& d) {
  if (!is_discriminant(d))
    throw std::invalid_argument("make_disc: need d < 0 with d = 0,1 mod 4");
  // Strip the largest square: f0^2 | d with d / f0^2 squarefree.
  Int f = 1;
  Int m = d;
  for (const auto& [p, e] : factor(abs(d)).factors) {
    long k = e / 2;
    if (k > 0) {
      Int pk = pow_int(p, static_cast<unsigned long>(k));
      f *= pk;
      m = divide_exact(m, pk * pk);
    }
  }
  // m squarefree; if m is not 1 mod 4 the factor 4 belongs to d_fund.
  if (mod_floor(m, 4) != 1) {
    // d = f^2 m with m = 2,3 mod 4 forces f even (otherwise d = 2,3 mod 4).
    f = divide_exact(f, Int(2));
    m *= 4;
  }
  Disc out;
  out.d = d;
  out.f = f;
  out.d_fund = m;
  out.w = d == -3 ? 6 : (d == -4 ? 4 : 2);
  return out;
}

// s = v_l(f), the conductor's valuation at l.
inline long conductor_valuation(const Disc& D, const Int& ell) {
  return valuation(D.f, ell);
}

// The l-depleted discriminant d * l^{-2 v_l(f)}; fundamental at l.
inline Int depleted(const Disc& D, const Int& ell) {
  long s = conductor_valuation(D, ell);
  return divide_exact(D.d, pow_int(ell * ell, static_cast<unsigned long>(s)));
}

// Trace and norm of omega = (d + sqrt(d))/2, the module generator used for
// all ideal lattices: Tr = d, N = (d^2 - d)/4.
inline Int omega_norm(const Disc& D) { return divide_exact(D.d * D.d - D.d, Int(4)); }

}  // namespace gzsm
