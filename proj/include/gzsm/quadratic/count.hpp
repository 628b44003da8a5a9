#pragma once

// Counting invertible ideals of a prescribed norm, with the two exclusion
// filters attached to a second conductor f2 and a distinguished prime ell:
//
//   count over invertible ideals b of O_{d1} with N(b) = N such that
//    (i)  p does not divide b, for every prime p | gcd(N, f2) with
//         p coprime to ell * d1, and
//    (ii) P^3 does not divide b (P the prime of O_{d1} over p), for every
//         prime p | gcd(N, f2, d1) with p != ell.
//
// For N coprime to the conductor of d1 the count is multiplicative in N
// and each local factor is read off the splitting of p; otherwise the
// ideals of norm N are enumerated and filtered.  Non-integral or
// non-positive arguments count zero ideals.

#include <stdexcept>
#include <vector>

#include "gzsm/arith/factor.hpp"
#include "gzsm/arith/int.hpp"
#include "gzsm/arith/symbols.hpp"
#include "gzsm/quadratic/disc.hpp"
#include "gzsm/quadratic/ideal.hpp"

namespace gzsm {

// Local-factor product, valid when gcd(N, f1) = 1.  Per prime power p^v of
// N the invertible ideals above p are: split p: P^a * conj(P)^b with
// a + b = v; inert p: p^{v/2} O for even v; ramified p: P^v.  Filter (i)
// kills every choice with min(a, b) >= 1 (split) resp. v >= 2 (inert);
// filter (ii) kills ramified v >= 3.
inline Int count_A_fast(const Disc& D1, const Int& f2, const Int& ell, const Int& N) {
  if (N <= 0) return 0;
  if (gcd(N, D1.f) != 1)
    throw std::invalid_argument("count_A_fast: norm meets the conductor");
  Int total = 1;
  for (const auto& [p, v] : factor(N).factors) {
    int chi = kronecker(D1.d, p);
    Int local;
    if (p == ell) {
      // The distinguished prime is exempt from both filters.
      local = chi == 1 ? Int(v + 1) : chi == -1 ? Int(v % 2 == 0 ? 1 : 0) : Int(1);
    } else if (chi == 1) {
      local = divides(p, f2) ? Int(2) : Int(v + 1);
    } else if (chi == -1) {
      local = (v % 2 == 0 && !divides(p, f2)) ? Int(1) : Int(0);
    } else {  // p | d1, coprime to f1
      local = (divides(p, f2) && v > 2) ? Int(0) : Int(1);
    }
    if (local == 0) return 0;
    total *= local;
  }
  return total;
}

// Direct enumeration, valid for every N: list the ideals of norm N and
// apply the filters as lattice conditions.  p | b is the inclusion
// b <= pO; P^3 | b is the inclusion b <= P^3 (P the unique ideal of norm
// p when p | d1, which exists also at conductor primes).
inline Int count_A_enumerate(const Disc& D1, const Int& f2, const Int& ell, const Int& N) {
  if (N <= 0) return 0;
  std::vector<IdealLat> drop;  // reject any b contained in one of these
  for (const Int& p : prime_divisors(gcd(N, f2))) {
    if (p == ell) continue;
    if (divides(p, D1.d))
      drop.push_back(ideal_pow(prime_over(D1, p), 3));
    else
      drop.push_back(ideal_scale(whole_ring(D1), p));
  }
  Int count = 0;
  for (const IdealLat& B : ideals_of_norm(D1, N)) {
    if (!is_invertible(B)) continue;
    bool excluded = false;
    for (const IdealLat& L : drop)
      if (lat_contains(L, B)) {
        excluded = true;
        break;
      }
    if (!excluded) ++count;
  }
  return count;
}

inline Int count_A(const Disc& D1, const Int& f2, const Int& ell, const Int& N) {
  if (N <= 0) return 0;
  if (gcd(N, D1.f) == 1) return count_A_fast(D1, f2, ell, N);
  return count_A_enumerate(D1, f2, ell, N);
}

// Rational argument: only integers index ideal norms.
inline Int count_A(const Disc& D1, const Int& f2, const Int& ell, const Rat& N) {
  if (!is_integer(N)) return 0;
  return count_A(D1, f2, ell, to_int(N));
}

}  // namespace gzsm
