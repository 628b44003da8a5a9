#pragma once
// Integer factorization: trial division to 10^6, then Pollard rho with Brent
// cycle detection.  Deterministic: the rho parameters are derived from the
// input so repeated runs yield identical work.

#include <gzsm/arith/int.hpp>
#include <gzsm/arith/primality.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace gzsm {

// sign * prod p_i^e_i with primes strictly increasing and exponents >= 1.
// Zero is not representable; factor(0) is an error by design.
struct Factorization {
  int sign = 1;  // -1 or +1
  std::vector<std::pair<Int, long>> factors;

  Int value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) v *= pow_int(p, static_cast<unsigned long>(e));
    return v;
  }

  long exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }

  bool operator==(const Factorization& o) const {
    return sign == o.sign && factors == o.factors;
  }
};

namespace detail {

inline const long kTrialBound = 1000000;

// Trial division of n (positive) by candidates up to kTrialBound, recording
// hits.  Inputs that fit a machine word take a native fast path.
inline void trial_divide(Int& n, std::map<Int, long>& out) {
  if (n.fits_ulong_p()) {
    unsigned long v = n.get_ui();
    auto strip = [&](unsigned long p) {
      while (v % p == 0) {
        v /= p;
        out[Int(p)]++;
      }
    };
    strip(2);
    strip(3);
    for (unsigned long c = 5; c <= static_cast<unsigned long>(kTrialBound) && c * c <= v;
         c += 6) {
      strip(c);
      if ((c + 2) * (c + 2) <= v) strip(c + 2);
    }
    // A cofactor below the bound's square has no divisor left: it is prime.
    if (v > 1 && v <= 1000000000000UL) {
      out[Int(v)]++;
      v = 1;
    }
    n = Int(v);
    return;
  }
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      out[Int(p)]++;
    }
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel; stop once the candidate passes sqrt(n) or the bound.
  Int root = isqrt(n);
  for (long c = 5; c <= kTrialBound && c <= root; c += 6) {
    bool hit = false;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(c))) {
      strip(static_cast<unsigned long>(c));
      hit = true;
    }
    if (c + 2 <= root && mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(c + 2))) {
      strip(static_cast<unsigned long>(c + 2));
      hit = true;
    }
    if (hit) root = isqrt(n);
  }
  if (n > 1 && n <= Int(kTrialBound) * kTrialBound) {
    // Remaining cofactor below the square of the bound must be prime.
    out[n]++;
    n = 1;
  }
}

// Brent's improvement of Pollard rho with batched gcds.  n odd composite,
// not a prime power obstacle: retries with increasing c until a proper
// factor appears (guaranteed eventually for composite n).
inline Int pollard_rho_brent(const Int& n) {
  if (divides(Int(2), n)) return 2;
  // Seed x0 and the increment from n itself for reproducibility.
  for (unsigned long c = 1 + mpz_fdiv_ui(n.get_mpz_t(), 41);; ++c) {
    Int y = 2 + static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), 1000003));
    Int g = 1, q = 1, x, ys;
    const long m = 128;
    long r = 1;
    while (g == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (long k = 0; k < r && g == 1; k += m) {
        ys = y;
        long lim = std::min(m, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time to recover the factor the batch skipped.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
    // Cycle degenerated for this c; try the next increment.
  }
}

inline void factor_recursive(const Int& n, std::map<Int, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  Int d = pollard_rho_brent(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

}  // namespace detail

// Complete factorization of n != 0.  Every returned prime passes is_prime.
inline Factorization factor(const Int& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, long> found;
  detail::trial_divide(m, found);
  detail::factor_recursive(m, found);
  f.factors.assign(found.begin(), found.end());
  return f;
}

// All positive divisors, sorted ascending.
inline std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> divs{1};
  for (const auto& [p, e] : f.factors) {
    std::vector<Int> next;
    next.reserve(divs.size() * (e + 1));
    Int pk = 1;
    for (long k = 0; k <= e; ++k) {
      for (const auto& d : divs) next.push_back(d * pk);
      pk *= p;
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::vector<Int> divisors(const Int& n) { return divisors(factor(n)); }

// Distinct prime divisors of n (n != 0), ascending.
inline std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> ps;
  for (const auto& [p, e] : factor(n).factors) ps.push_back(p);
  return ps;
}

}  // namespace gzsm
