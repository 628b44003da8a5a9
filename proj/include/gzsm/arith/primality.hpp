#pragma once
// Primality testing: Miller-Rabin, deterministic below a published bound.

#include <gzsm/arith/int.hpp>

namespace gzsm {

namespace detail {

// One strong-probable-prime round.  n odd, n > 2, n - 1 = 2^s * d with d odd.
// Returns false when `a` witnesses compositeness.
inline bool strong_probable_prime(const Int& n, const Int& a, const Int& d, long s) {
  Int base = mod_floor(a, n);
  if (base == 0) return true;  // a shares all of n; no information, not a witness
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic for n < 3317044064679887385961981 with the fixed witness set
// {2,3,5,7,11,13,17,19,23,29,31,37} (Sorenson & Webster).  Above that bound,
// 40 additional rounds with bases derived deterministically from n, so results
// are reproducible run to run.
inline bool is_prime(const Int& n) {
  if (n < 0) throw std::invalid_argument("is_prime: n must be non-negative");
  if (n < 2) return false;
  static const long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                      31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (long p : kSmallPrimes) {
    if (n == p) return true;
    if (divides(Int(p), n)) return false;
  }
  Int d = n - 1;
  long s = 0;
  while (divides(Int(2), d)) {
    d /= 2;
    ++s;
  }
  static const long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long a : kWitnesses) {
    if (!detail::strong_probable_prime(n, Int(a), d, s)) return false;
  }
  static const Int kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  // Deterministically seeded extra rounds for the large range.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  for (int round = 0; round < 40; ++round) {
    Int a = rng.get_z_range(n - 3) + 2;  // a in [2, n-2]
    if (!detail::strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

// Smallest prime strictly greater than n.
inline Int next_prime(const Int& n) {
  Int c = n < 1 ? Int(1) : n;
  while (true) {
    ++c;
    if (is_prime(c)) return c;
  }
}

}  // namespace gzsm
