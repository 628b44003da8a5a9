#pragma once

// High-precision evaluation of the modular j-invariant at CM points.
//
// The q-expansion coefficients of j are computed exactly over Z from
// Eisenstein series, j = E4^3 / Delta, and cached process-wide.  A CM point
// tau = (-b + sqrt(d)) / (2a) with 3a^2 <= |d| (every reduced form
// satisfies this) has |q| = exp(-pi sqrt|d| / a) <= exp(-pi sqrt 3), so the
// series converges geometrically; the truncation length is chosen against
// the classical coefficient bound |c(n)| <= exp(4 pi sqrt n).

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gzsm/arith/int.hpp"
#include "gzsm/oracle/bigfloat.hpp"

namespace gzsm {

namespace detail {

// c[n] = sum_{k} a[k] b[n-k], truncated to the shorter input length.
inline std::vector<Int> series_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::size_t L = std::min(a.size(), b.size());
  std::vector<Int> c(L, Int(0));
  for (std::size_t i = 0; i < L; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < L; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Multiplicative inverse of a series with constant term 1.
inline std::vector<Int> series_inverse(const std::vector<Int>& a) {
  std::vector<Int> b(a.size(), Int(0));
  b[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    Int s = 0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * b[n - k];
    b[n] = -s;
  }
  return b;
}

// s[n] = sigma_k(n) = sum of k-th powers of divisors, s[0] = 0.
inline std::vector<Int> sigma_series(unsigned long k, std::size_t L) {
  std::vector<Int> s(L, Int(0));
  for (std::size_t d = 1; d < L; ++d) {
    Int dk = pow_int(Int(d), k);
    for (std::size_t n = d; n < L; n += d) s[n] += dk;
  }
  return s;
}

}  // namespace detail

// Coefficients of Delta = q prod (1-q^n)^24 up to q^L: an independent route
// to the discriminant series, used to cross-check the Eisenstein route.
inline std::vector<Int> delta_coeffs_eta(std::size_t L) {
  std::vector<Int> p(L + 1, Int(0));
  p[0] = 1;
  for (std::size_t n = 1; n <= L; ++n)          // multiply by (1 - q^n)
    for (std::size_t i = L; i >= n; --i) p[i] -= p[i - n];
  std::vector<Int> p2 = detail::series_mul(p, p);
  std::vector<Int> p4 = detail::series_mul(p2, p2);
  std::vector<Int> p8 = detail::series_mul(p4, p4);
  std::vector<Int> p16 = detail::series_mul(p8, p8);
  std::vector<Int> p24 = detail::series_mul(p16, p8);
  std::vector<Int> delta(L + 1, Int(0));
  for (std::size_t i = 0; i + 1 <= L; ++i) delta[i + 1] = p24[i];
  return delta;
}

// Coefficients c(-1), c(0), ..., c(N) of j(q) = sum c(n) q^n, with
// out[k] = c(k - 1).  Derived exactly from j = E4^3 / Delta.
inline std::vector<Int> j_coefficients(std::size_t N) {
  static std::mutex mu;
  static std::vector<Int> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() >= N + 2) return std::vector<Int>(cache.begin(), cache.begin() + N + 2);

  // One spare index: the top coefficient of the inverted series sees the
  // truncation boundary and is discarded below.
  std::size_t L = N + 3;
  std::vector<Int> e4(L, Int(0)), e6(L, Int(0));
  std::vector<Int> s3 = detail::sigma_series(3, L), s5 = detail::sigma_series(5, L);
  e4[0] = 1;
  e6[0] = 1;
  for (std::size_t n = 1; n < L; ++n) {
    e4[n] = 240 * s3[n];
    e6[n] = -504 * s5[n];
  }
  std::vector<Int> e43 = detail::series_mul(detail::series_mul(e4, e4), e4);
  std::vector<Int> e62 = detail::series_mul(e6, e6);
  std::vector<Int> delta(L, Int(0));
  for (std::size_t n = 0; n < L; ++n) delta[n] = divide_exact(e43[n] - e62[n], Int(1728));
  if (delta[0] != 0 || delta[1] != 1)
    throw std::logic_error("j_coefficients: discriminant series must start at q");

  std::vector<Int> d_over_q(L, Int(0));  // Delta / q, constant term 1
  for (std::size_t n = 0; n + 1 < L; ++n) d_over_q[n] = delta[n + 1];
  d_over_q[L - 1] = 0;
  std::vector<Int> inv = detail::series_inverse(d_over_q);
  cache = detail::series_mul(e43, inv);  // cache[k] = c(k - 1)
  cache.resize(N + 2);
  return cache;
}

// Smallest truncation point N such that sum_{n > N} |c(n) q^n| is below
// 2^-(prec_bits + 15), for log2 |q| = log2_qabs < 0.
inline std::size_t j_terms_needed(long prec_bits, double log2_qabs) {
  if (log2_qabs >= -1.0) throw std::invalid_argument("j_terms_needed: |q| too close to 1");
  const double log2e = 1.4426950408889634;
  double target = -(static_cast<double>(prec_bits) + 16);
  for (std::size_t n = 8;; ++n) {
    double nn = static_cast<double>(n + 1);
    double t = 4.0 * M_PI * std::sqrt(nn) * log2e + nn * log2_qabs;
    // Beyond n the terms at least halve each step, so the tail is bounded
    // by twice the (n+1)-st term.
    bool halving = 2.0 * M_PI * log2e / std::sqrt(nn) + log2_qabs <= -1.0;
    if (t <= target && halving) return n;
    if (n > 2000000) throw std::runtime_error("j_terms_needed: no truncation point found");
  }
}

// j at the CM point tau = (-b + sqrt(d)) / (2a), d < 0, a > 0, 3a^2 <= |d|.
// Results are memoized process-wide, keyed by (d, a, b, prec_bits); the
// computation itself carries 64 guard bits.
inline BigComplex j_invariant(const Int& d, const Int& a, const Int& b, long prec_bits) {
  if (prec_bits < 64) throw std::invalid_argument("j_invariant: need at least 64 bits");
  if (d >= 0 || a <= 0 || 3 * a * a > -d)
    throw std::invalid_argument("j_invariant: point outside the reduced domain");

  using Key = std::tuple<Int, Int, Int, long>;
  static std::mutex mu;
  static std::map<Key, BigComplex> memo;
  Key key{d, a, b, prec_bits};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  mpfr_prec_t P = static_cast<mpfr_prec_t>(prec_bits + 64);
  // q = exp(-pi sqrt|d| / a) * exp(-i pi b / a)
  BigFloat pi = pi_bf(P);
  BigFloat sq = sqrt_bf(BigFloat::from_int(-d, P));
  BigFloat af = BigFloat::from_int(a, P);
  BigFloat r = exp_bf(-(pi * sq / af));
  BigFloat theta = -(pi * BigFloat::from_int(b, P) / af);
  BigComplex q{r * cos_bf(theta), r * sin_bf(theta)};

  double log2_qabs =
      -M_PI * std::sqrt(mpz_get_d(Int(-d).get_mpz_t())) / mpz_get_d(Int(a).get_mpz_t()) * 1.4426950408889634;
  std::size_t N = j_terms_needed(prec_bits, log2_qabs);
  std::vector<Int> c = j_coefficients(N);

  BigComplex acc = reciprocal(q) * c[0];            // c(-1) q^-1
  acc.re = acc.re + BigFloat::from_int(c[1], P);    // c(0)
  BigComplex qn{BigFloat::from_long(1, P), BigFloat(P)};
  for (std::size_t n = 1; n <= N; ++n) {
    qn = qn * q;
    acc = acc + qn * c[n + 1];
  }

  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, acc);
  return acc;
}

}  // namespace gzsm
