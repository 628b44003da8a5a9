#pragma once
// Exact integer/rational types and small arithmetic helpers shared by every module.
//
// Int is an arbitrary-precision signed integer, Rat an exact rational kept in
// lowest terms with positive denominator (the GMP canonical form).  Nothing in
// the library ever rounds: fractional valuations such as 8/(w1*w2) stay exact.

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzsm {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel for "valuation of zero" where the +infinity convention is needed.
inline constexpr long kValuationInfinity = LONG_MAX;

// Largest e with p^e | n.  Rejects n = 0; p must be a prime > 1 (not checked
// beyond p > 1 since callers pass known primes).
inline long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (p <= 1) throw std::invalid_argument("valuation: p must exceed 1");
  Int reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// Valuation with the v_p(0) = +infinity convention (used by the dyadic
// counting function rho_tilde, whose arguments may vanish).
inline long valuation_or_infinity(const Int& n, const Int& p) {
  if (n == 0) return kValuationInfinity;
  return valuation(n, p);
}

// n with all factors of p removed.
inline Int remove_factor(const Int& n, const Int& p) {
  Int reduced;
  mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return reduced;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Floor square root; n must be non-negative.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Representative of a mod m in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) throw std::invalid_argument("mod_floor: zero modulus");
  Int r;
  Int mm = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; throws if d does not divide n.
inline Int divide_exact(const Int& n, const Int& d) {
  if (!divides(d, n)) throw std::invalid_argument("divide_exact: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_int: not an integer");
  return r.get_num();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

// Rationals serialize as "p" or "p/q" so no precision is ever lost in output.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace gzsm
