// Tests for the analytic machinery: q-expansion coefficients of j (two
// independent routes to the discriminant series), evaluation at CM points
// with class number one (exact classical values), multi-class products,
// adaptive-precision stability, and bounded factorization.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include <gzsm/oracle/jproduct.hpp>

using namespace gzsm;

namespace {

Disc D(long d) { return make_disc(Int(d)); }

// |j(tau) - target| < 2^-20 for the single reduced form (a, b, *) of d.
void check_j_value(long d, long a, long b, const Int& target) {
  BigComplex j = j_invariant(Int(d), Int(a), Int(b), 128);
  BigFloat tol = pow2_bf(-20, 64);
  INFO("d = " << d);
  REQUIRE(abs_bf(j.re - BigFloat::from_int(target, 192)) < tol);
  REQUIRE(abs_bf(j.im) < tol);
}

}  // namespace

TEST_CASE("j-series coefficients match the classical expansion") {
  std::vector<Int> c = j_coefficients(5);
  REQUIRE(c[0] == Int(1));
  REQUIRE(c[1] == Int(744));
  REQUIRE(c[2] == Int(196884));
  REQUIRE(c[3] == Int(21493760));
  REQUIRE(c[4] == Int(864299970));
  REQUIRE(c[5] == Int("20245856256"));
  REQUIRE(c[6] == Int("333202640600"));
}

TEST_CASE("discriminant series: eta product agrees with Eisenstein route") {
  // tau(1..12)
  const std::vector<long> tau{1,      -24,     252,    -1472,  4830,    -6048,
                              -16744, 84480,   -113643, -115920, 534612, -370944};
  std::vector<Int> eta = delta_coeffs_eta(12);
  std::size_t L = 14;
  std::vector<Int> s3 = detail::sigma_series(3, L), s5 = detail::sigma_series(5, L);
  std::vector<Int> e4(L, Int(0)), e6(L, Int(0));
  e4[0] = 1;
  e6[0] = 1;
  for (std::size_t n = 1; n < L; ++n) {
    e4[n] = 240 * s3[n];
    e6[n] = -504 * s5[n];
  }
  std::vector<Int> e43 = detail::series_mul(detail::series_mul(e4, e4), e4);
  std::vector<Int> e62 = detail::series_mul(e6, e6);
  for (std::size_t n = 1; n <= 12; ++n) {
    REQUIRE(eta[n] == divide_exact(e43[n] - e62[n], Int(1728)));
    REQUIRE(eta[n] == Int(tau[n - 1]));
  }
}

TEST_CASE("j-series coefficients obey the exponential bound") {
  std::vector<Int> c = j_coefficients(80);
  for (std::size_t n = 1; n <= 80; ++n) {
    // log c(n) <= 4 pi sqrt(n); coefficients are positive.
    REQUIRE(c[n + 1] > 0);
    double logc = std::log(mpz_get_d(c[n + 1].get_mpz_t()));
    REQUIRE(logc <= 4.0 * M_PI * std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("j at class-number-one CM points") {
  check_j_value(-3, 1, 1, Int(0));
  check_j_value(-4, 1, 0, Int(1728));
  check_j_value(-7, 1, 1, Int(-3375));
  check_j_value(-8, 1, 0, Int(8000));
  check_j_value(-11, 1, 1, Int(-32768));
  check_j_value(-12, 1, 0, Int(54000));
  check_j_value(-16, 1, 0, Int(287496));
  check_j_value(-19, 1, 1, Int(-884736));
  check_j_value(-27, 1, 1, Int(-12288000));
  check_j_value(-28, 1, 0, Int(16581375));
  check_j_value(-43, 1, 1, Int(-884736000));
  check_j_value(-67, 1, 1, Int(-147197952000));
  check_j_value(-163, 1, 1, Int("-262537412640768000"));
}

TEST_CASE("j_invariant argument validation and memo determinism") {
  REQUIRE_THROWS_AS(j_invariant(Int(-3), Int(1), Int(1), 32), std::invalid_argument);
  REQUIRE_THROWS_AS(j_invariant(Int(-3), Int(2), Int(1), 128), std::invalid_argument);
  REQUIRE_THROWS_AS(j_invariant(Int(4), Int(1), Int(0), 128), std::invalid_argument);
  BigComplex a = j_invariant(Int(-15), Int(2), Int(1), 128);
  BigComplex b = j_invariant(Int(-15), Int(2), Int(1), 128);
  REQUIRE(mpfr_cmp(a.re.raw(), b.re.raw()) == 0);
  REQUIRE(mpfr_cmp(a.im.raw(), b.im.raw()) == 0);
}

TEST_CASE("j_product fixtures") {
  REQUIRE(j_product(D(-3), D(-4)).value == Int(-1728));
  REQUIRE(j_product(D(-4), D(-3)).value == Int(1728));
  REQUIRE(j_product(D(-3), D(-12)).value == Int(-54000));
  REQUIRE(j_product(D(-3), D(-27)).value == Int(12288000));
  REQUIRE(j_product(D(-4), D(-27)).value == Int(12289728));
  REQUIRE(j_product(D(-3), D(-7)).value == Int(3375));
  REQUIRE(j_product(D(-4), D(-7)).value == Int(5103));
  // Two classes: the product is the class polynomial of -15 at j(-7),
  // H(-3375) = -3^6 5^3 7^2 13^2.
  REQUIRE(j_product(D(-15), D(-7)).value == Int(-754606125));
  REQUIRE_THROWS_AS(j_product(D(-12), D(-12)), std::invalid_argument);
}

TEST_CASE("j_product is stable across precision") {
  for (auto [d1, d2] : std::vector<std::pair<long, long>>{{-3, -4}, {-15, -7}, {-20, -11}}) {
    JProduct J = j_product(D(d1), D(d2));
    JRounding r1 = j_product_at(D(d1), D(d2), J.prec_bits);
    JRounding r2 = j_product_at(D(d1), D(d2), J.prec_bits + 64);
    INFO("d1 = " << d1 << " d2 = " << d2);
    REQUIRE(r1.ok);
    REQUIRE(r2.ok);
    REQUIRE(r1.value == r2.value);
    REQUIRE(r1.value == J.value);
  }
}

TEST_CASE("factor_smooth and full_factor_J") {
  Factorization f = full_factor_J(D(-3), D(-12), Int(-54000));
  REQUIRE(f.sign == -1);
  REQUIRE(f.factors == std::vector<std::pair<Int, long>>{{Int(2), 4}, {Int(3), 3}, {Int(5), 3}});
  // 77 = 7 * 11 is not 5-smooth.
  try {
    factor_smooth(Int(77), Int(5));
    FAIL("expected CofactorError");
  } catch (const CofactorError& e) {
    REQUIRE(e.cofactor == Int(77));
  }
}

TEST_CASE("v_J_oracle fixtures") {
  // J(-3,-12) = -2^4 3^3 5^3, w1 w2 = 12: v_2(J^(8/12)) = 32/12 = 8/3.
  REQUIRE(v_J_oracle(D(-3), D(-12), Int(2)) == make_rat(8, 3));
  REQUIRE(v_J_oracle(D(-3), D(-12), Int(3)) == make_rat(2, 1));
  REQUIRE(v_J_oracle(D(-3), D(-12), Int(5)) == make_rat(2, 1));
  REQUIRE(v_J_oracle(D(-3), D(-12), Int(7)) == make_rat(0, 1));
  // J(-4,-7) = 3^6 7, w1 w2 = 8: v_3 = 48/8 = 6.
  REQUIRE(v_J_oracle(D(-4), D(-7), Int(3)) == make_rat(6, 1));
  REQUIRE(v_J_oracle(D(-4), D(-7), Int(7)) == make_rat(1, 1));
}
