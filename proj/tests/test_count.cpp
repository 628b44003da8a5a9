// Tests for the filtered ideal count: fixtures, equality of the local-factor
// product with direct enumeration, collapse under the distinguished prime,
// and an independent formulation of the exclusion filters.
#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <gzsm/quadratic/count.hpp>

using namespace gzsm;

namespace {

Disc D(long d) { return make_disc(Int(d)); }

std::vector<long> valid_discs(long bound) {
  std::vector<long> out;
  for (long d = -3; d >= -bound; --d)
    if (is_discriminant(Int(d))) out.push_back(d);
  return out;
}

// Filter oracle with the divisibility conditions stated differently:
// p | b  <=>  b = p * (b : p)  (scaling the p-preimage back recovers b);
// P^3 | b  <=>  b lies in P^3.
Int count_A_oracle(const Disc& D1, const Int& f2, const Int& ell, const Int& N) {
  if (N <= 0) return 0;
  Int count = 0;
  for (const IdealLat& B : ideals_of_norm(D1, N)) {
    if (!is_invertible(B)) continue;
    bool excluded = false;
    for (const Int& p : prime_divisors(gcd(N, f2))) {
      if (p == ell) continue;
      if (divides(p, D1.d)) {
        if (lat_contains(ideal_pow(prime_over(D1, p), 3), B)) excluded = true;
      } else {
        if (ideal_scale(preimage_scale(B, p), p) == B) excluded = true;
      }
    }
    if (!excluded) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("count_A fixtures") {
  // d = -7: 2 splits, so norm 4 is carried by P^2, conj(P)^2 and 2O; a
  // second conductor divisible by 2 excludes 2O.
  REQUIRE(count_A(D(-7), Int(1), Int(3), Int(4)) == 3);
  REQUIRE(count_A(D(-7), Int(2), Int(3), Int(4)) == 2);
  // The distinguished prime is exempt: at ell = 2 the filter is void again.
  REQUIRE(count_A(D(-7), Int(2), Int(2), Int(4)) == 3);

  REQUIRE(count_A(D(-3), Int(1), Int(5), Int(1)) == 1);   // the ring itself
  REQUIRE(count_A(D(-3), Int(1), Int(2), Int(2)) == 0);   // 2 inert, odd power
  REQUIRE(count_A(D(-3), Int(1), Int(2), Int(4)) == 1);   // 2O only
  REQUIRE(count_A(D(-4), Int(1), Int(2), Int(2)) == 1);   // ramified prime
  REQUIRE(count_A(D(-4), Int(1), Int(2), Int(8)) == 1);   // P^3 at ell: exempt

  // Ramified p = 7 | f2 with ell elsewhere: cube filter kills v >= 3.
  REQUIRE(count_A(D(-63), Int(7), Int(5), Int(49)) == 1);
  REQUIRE(count_A(D(-63), Int(7), Int(5), Int(343)) == 0);
  REQUIRE(count_A(D(-63), Int(1), Int(5), Int(343)) == 1);

  // Norm meeting the conductor (enumeration path): O_{-12} has invertible
  // ideals (4,1,1), (4,3,1) and 2O of norm 4, and none of norm 8.
  REQUIRE(count_A(D(-12), Int(1), Int(5), Int(4)) == 3);
  REQUIRE(count_A(D(-12), Int(1), Int(5), Int(8)) == 0);
}

TEST_CASE("count_A degenerate arguments") {
  REQUIRE(count_A(D(-7), Int(1), Int(3), Int(0)) == 0);
  REQUIRE(count_A(D(-7), Int(1), Int(3), Int(-4)) == 0);
  REQUIRE(count_A(D(-7), Int(1), Int(3), make_rat(4, 3)) == 0);
  REQUIRE(count_A(D(-7), Int(1), Int(3), make_rat(8, 2)) ==
          count_A(D(-7), Int(1), Int(3), Int(4)));
}

TEST_CASE("count_A: local-factor product equals enumeration") {
  const std::vector<long> f2s{1, 2, 3, 5, 6, 7, 12, 30, 35};
  const std::vector<long> ells{2, 3, 5, 7};
  for (long d : valid_discs(60)) {
    Disc dd = D(d);
    for (long N = 1; N <= 100; ++N) {
      if (gcd(Int(N), dd.f) != 1) continue;
      for (long f2 : f2s)
        for (long ell : ells) {
          INFO("d = " << d << " f2 = " << f2 << " ell = " << ell << " N = " << N);
          REQUIRE(count_A_fast(dd, Int(f2), Int(ell), Int(N)) ==
                  count_A_enumerate(dd, Int(f2), Int(ell), Int(N)));
        }
    }
  }
}

TEST_CASE("count_A: filters agree with the quotient-scaling formulation") {
  const std::vector<long> f2s{1, 6, 30, 35};
  const std::vector<long> ells{2, 5};
  for (long d : valid_discs(40)) {
    Disc dd = D(d);
    for (long N = 1; N <= 80; ++N)
      for (long f2 : f2s)
        for (long ell : ells) {
          INFO("d = " << d << " f2 = " << f2 << " ell = " << ell << " N = " << N);
          REQUIRE(count_A(dd, Int(f2), Int(ell), Int(N)) ==
                  count_A_oracle(dd, Int(f2), Int(ell), Int(N)));
        }
  }
}

TEST_CASE("count_A: collapse at a non-split distinguished prime") {
  // Multiplying N by ell^2 (inert) or ell (ramified) changes only the
  // ell-part of each counted ideal, bijectively.
  for (long d : valid_discs(50)) {
    Disc dd = D(d);
    for (long ell : {2L, 3L, 5L}) {
      if (divides(Int(ell), dd.f)) continue;
      int chi = kronecker(dd.d, Int(ell));
      if (chi == 1) continue;
      for (long N = 1; N <= 60; ++N)
        for (long f2 : {1L, 6L, 30L}) {
          INFO("d = " << d << " ell = " << ell << " N = " << N << " f2 = " << f2);
          Int scaled = chi == -1 ? Int(ell * ell * N) : Int(ell * N);
          REQUIRE(count_A(dd, Int(f2), Int(ell), scaled) ==
                  count_A(dd, Int(f2), Int(ell), Int(N)));
        }
    }
  }
}
