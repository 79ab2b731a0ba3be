#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsv/bernoulli.hpp"
#include "lsv/identities.hpp"

using namespace lsv;

TEST_CASE("c coefficients: pinned values") {
  CHECK(c_coeff(0, 0) == rational(1));
  CHECK(c_coeff(1, 0) == rational(-1, 2));
  CHECK(c_coeff(0, 1) == rational(1, 2));
  CHECK(c_coeff(1, 1) == rational(-1, 6));
  CHECK(c_coeff(2, 0) == rational(1, 12));
  CHECK(c_coeff(0, 2) == rational(1, 12));
}

TEST_CASE("c coefficients: the two readings of the formula agree") {
  for (unsigned p = 0; p <= 15; ++p)
    for (unsigned q = 0; p + q <= 15; ++q)
      CHECK(c_coeff(p, q) * factorial(p + q) ==
            (q % 2 != 0 ? -bernoulli(p + q) : bernoulli(p + q)) *
                binomial(p + q, long(q)));
}

TEST_CASE("eq4 residual: hand-checked low cases") {
  // (0,0): 1 - 1/2 - 1/2
  CHECK(is_zero(eq4_residual(0, 0)));
  // (1,0): -1/2 + 1/12 + 1/4 + 1/6
  CHECK(is_zero(eq4_residual(1, 0)));
  CHECK(is_zero(eq4_residual(0, 1)));
}

TEST_CASE("eq4 residual vanishes for all p+q <= 20") {
  for (unsigned total = 0; total <= 20; ++total)
    for (unsigned p = 0; p <= total; ++p)
      CHECK(is_zero(eq4_residual(p, total - p)));
}

TEST_CASE("quadratic recursion residual") {
  CHECK(is_zero(recursion_residual(1)));  // pins B_1 = -1/2
  CHECK(is_zero(recursion_residual(2)));
  for (unsigned n = 1; n <= 60; ++n) CHECK(is_zero(recursion_residual(n)));
  CHECK_THROWS_AS(recursion_residual(0), std::invalid_argument);
}

TEST_CASE("Euler formula") {
  // n = 4: both sides are 1/144
  CHECK(Rational(-5) * bernoulli(4) / factorial(4) == rational(1, 144));
  CHECK(is_zero(euler_residual(4)));
  CHECK(is_zero(euler_residual(6)));
  CHECK(is_zero(euler_residual(40)));
  for (unsigned n = 4; n <= 40; n += 2) CHECK(is_zero(euler_residual(n)));
  CHECK_THROWS_AS(euler_residual(5), std::invalid_argument);
  CHECK_THROWS_AS(euler_residual(2), std::invalid_argument);
}

TEST_CASE("generalized identity: Euler specialization at m = n-1") {
  // second sum empty, so the variants coincide
  CHECK(is_zero(gen_euler_residual(4, 3, GenEulerVariant::AsPrinted)));
  CHECK(is_zero(gen_euler_residual(4, 3, GenEulerVariant::SumCorrected)));
  CHECK(is_zero(gen_euler_residual(4, 2, GenEulerVariant::AsPrinted)));
  CHECK(is_zero(gen_euler_residual(4, 2, GenEulerVariant::SumCorrected)));
}

TEST_CASE("generalized identity: the printed sign fails at (4,0)") {
  CHECK(is_zero(gen_euler_residual(4, 0, GenEulerVariant::SumCorrected)));
  CHECK(gen_euler_residual(4, 0, GenEulerVariant::AsPrinted) ==
        rational(1, 72));
  CHECK(is_zero(gen_euler_residual(4, 1, GenEulerVariant::SumCorrected)));
  CHECK(gen_euler_residual(4, 1, GenEulerVariant::AsPrinted) ==
        rational(1, 36));
}

TEST_CASE("generalized identity: corrected variant passes the whole batch") {
  for (unsigned n = 4; n <= 40; n += 2)
    for (unsigned m = 0; m <= n - 1; ++m)
      CHECK(is_zero(gen_euler_residual(n, m, GenEulerVariant::SumCorrected)));
}

TEST_CASE("generalized identity: corrected variant is m <-> n-m-1 symmetric") {
  for (unsigned n = 4; n <= 24; n += 2)
    for (unsigned m = 0; m <= n - 1; ++m)
      CHECK(gen_euler_residual(n, m, GenEulerVariant::SumCorrected) ==
            gen_euler_residual(n, n - m - 1, GenEulerVariant::SumCorrected));
}

// The n = 2 instance is outside both variants: its m = n-1 case is Euler's
// formula at n = 2, which needs n > 2 (the left side is -B_2/2!·C(3,n-m)
// while both sums are empty). Pinned here so the boundary stays visible.
TEST_CASE("generalized identity: n = 2 fails in both variants") {
  for (unsigned m = 0; m <= 1; ++m) {
    CHECK_FALSE(is_zero(gen_euler_residual(2, m, GenEulerVariant::AsPrinted)));
    CHECK_FALSE(
        is_zero(gen_euler_residual(2, m, GenEulerVariant::SumCorrected)));
  }
  CHECK(gen_euler_residual(2, 0, GenEulerVariant::SumCorrected) ==
        rational(-1, 4));
}

TEST_CASE("eq4 substitution link arbitrates the sign variant") {
  for (unsigned n = 4; n <= 40; n += 2)
    for (unsigned m = 1; m + 2 <= n; ++m)
      CHECK(is_zero(gen_euler_eq4_link(n, m)));
  CHECK_THROWS_AS(gen_euler_eq4_link(6, 0), std::invalid_argument);
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(gen_euler_residual(5, 0, GenEulerVariant::SumCorrected),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_euler_residual(4, 4, GenEulerVariant::SumCorrected),
                  std::invalid_argument);
}
