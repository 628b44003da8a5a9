#pragma once
// Kronecker symbol (a|n) and the p-adic Hilbert symbol (a,b)_p, including the
// dyadic case and the infinite place.

#include <gzsm/arith/int.hpp>
#include <gzsm/arith/primality.hpp>

namespace gzsm {

// Place label for the infinite (real) place in hilbert_symbol.
inline const Int kInfinitePlace = 0;

// Full Kronecker symbol with the standard conventions at 2 and -1:
// (a|0) = 1 iff a = +-1, (a|2) = 0,1,-1 per a mod 8, (a|-1) = sign(a).
inline int kronecker(const Int& a_in, const Int& n_in) {
  Int a = a_in, n = n_in;
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Split off the even part of n; (a|2) depends on a mod 8.
  if (divides(Int(2), n)) {
    if (divides(Int(2), a)) return 0;
    long v = valuation(n, 2);
    n = remove_factor(n, 2);
    if (v % 2 == 1) {
      unsigned long a8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
      if (a8 == 3 || a8 == 5) result = -result;
    }
  }
  // Jacobi loop on odd n > 0 with reciprocity.
  a = mod_floor(a, n);
  while (a != 0) {
    while (divides(Int(2), a)) {
      a /= 2;
      unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (n8 == 3 || n8 == 5) result = -result;
    }
    swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    a = mod_floor(a, n);
  }
  return n == 1 ? result : 0;
}

namespace detail {

// (u - 1)/2 mod 2 for odd u.
inline int eps2(const Int& u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0; }

// (u^2 - 1)/8 mod 2 for odd u.
inline int omega2(const Int& u) {
  unsigned long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
  return (u8 == 3 || u8 == 5) ? 1 : 0;
}

}  // namespace detail

// Hilbert symbol (a,b)_p for a prime p, or the real place when p is
// kInfinitePlace (0).  Nonzero a, b required.
//   odd p : (-1)^{alpha beta (p-1)/2} (u|p)^beta (v|p)^alpha
//   p = 2 : (-1)^{eps(u)eps(v) + alpha omega(v) + beta omega(u)}
//   real  : -1 iff a < 0 and b < 0
// where a = p^alpha u, b = p^beta v.
inline int hilbert_symbol(const Int& a, const Int& b, const Int& p) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
  if (p == kInfinitePlace) return (a < 0 && b < 0) ? -1 : 1;
  if (p < 2) throw std::invalid_argument("hilbert_symbol: invalid place");
  long alpha = valuation(a, p);
  long beta = valuation(b, p);
  Int u = remove_factor(a, p);
  Int v = remove_factor(b, p);
  if (p == 2) {
    int e = detail::eps2(u) * detail::eps2(v) +
            static_cast<int>(alpha % 2) * detail::omega2(v) +
            static_cast<int>(beta % 2) * detail::omega2(u);
    return e % 2 ? -1 : 1;
  }
  // (-1)^{alpha beta (p-1)/2}: nontrivial only when both valuations are odd
  // and p = 3 mod 4.
  bool e = (alpha % 2) && (beta % 2) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3;
  int s = e ? -1 : 1;
  if (beta % 2) s *= kronecker(u, p);
  if (alpha % 2) s *= kronecker(v, p);
  return s;
}

}  // namespace gzsm
