#pragma once

// A pair of imaginary-quadratic orders and the slot decomposition of the
// valuation problem: every prime factor of the class-pair product J(d1, d2)
// is accounted for by the slots x >= 0 with x^2 <= d1 d2 and
// x = d1 d2 (mod 2), through the slot numbers m_x = (d1 d2 - x^2)/4.
// A slot with x > 0 stands for the pair +-x, hence carries multiplicity 2;
// m_x = 0 (square d1 d2) is the class-number slot.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gzsm/arith/factor.hpp"
#include "gzsm/arith/symbols.hpp"
#include "gzsm/quadratic/disc.hpp"

namespace gzsm {

struct PairContext {
  Disc D1, D2;
  Int dd;  // d1 * d2 > 0
};

inline PairContext make_pair_context(const Int& d1, const Int& d2) {
  if (d1 == d2) throw std::invalid_argument("pair: discriminants must differ");
  return {make_disc(d1), make_disc(d2), d1 * d2};
}

struct XSlot {
  Int x;
  Int m;     // (d1 d2 - x^2) / 4 >= 0
  int mult;  // 1 at x = 0, else 2
};

inline std::vector<XSlot> enumerate_x(const PairContext& C) {
  std::vector<XSlot> out;
  for (Int x = mod_floor(C.dd, Int(2)); x * x <= C.dd; x += 2)
    out.push_back({x, divide_exact(C.dd - x * x, Int(4)), x == 0 ? 1 : 2});
  return out;
}

// The support of a slot: the single finite place where (d1, -m) fails to
// split, provided it divides m.  Slots supported nowhere contribute to no
// prime.  For the m = 0 slot the support is the prime ell with
// d2/d1 = ell^(2k) (either way round), when such a prime exists.
inline std::optional<Int> support_prime(const PairContext& C, const XSlot& s) {
  if (s.m == 0) {
    for (int dir = 0; dir < 2; ++dir) {
      const Int& a = dir == 0 ? C.D1.d : C.D2.d;
      const Int& b = dir == 0 ? C.D2.d : C.D1.d;
      if (!divides(a, b)) continue;
      Int q = divide_exact(b, a);  // positive, > 1 in exactly one direction
      if (q == 1) continue;
      Factorization f = factor(q);
      if (f.factors.size() == 1 && f.factors[0].second % 2 == 0) return f.factors[0].first;
    }
    return std::nullopt;
  }
  std::set<Int> S;
  for (const Int& p : prime_divisors(2 * C.D1.d * s.m))
    if (hilbert_symbol(C.D1.d, -s.m, p) == -1) S.insert(p);
  // The infinite place contributes -1 (both arguments negative), so the
  // product formula forces an odd number of finite failures.
  if (S.size() % 2 != 1) throw std::logic_error("support_prime: even number of failing places");
  if (S.size() == 1 && divides(*S.begin(), s.m)) return *S.begin();
  return std::nullopt;
}

}  // namespace gzsm
