#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsv/bernoulli.hpp"
#include "lsv/identities.hpp"
#include "lsv/rational.hpp"

using namespace lsv;

TEST_CASE("rational canonical form and parsing") {
  CHECK(to_string(rational(2, 4)) == "1/2");
  CHECK(to_string(rational(-2, 4)) == "-1/2");
  CHECK(to_string(rational(3, -6)) == "-1/2");
  CHECK(to_string(rational(0, 7)) == "0");
  CHECK(to_string(rational(5)) == "5");
  CHECK(rational_from_string("-7/21") == rational(-1, 3));
  CHECK(rational_from_string("42") == rational(42));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(5, 4) == rational(5));
  CHECK(binomial(0, 0) == rational(1));
  CHECK(binomial(7, 0) == rational(1));
  CHECK(binomial(2, 3) == rational(0));
  CHECK(binomial(4, -1) == rational(0));
}

TEST_CASE("binomial symmetry and Pascal's rule") {
  for (unsigned long n = 0; n <= 20; ++n)
    for (long k = 0; long(n) >= k; ++k) {
      CHECK(binomial(n, k) == binomial(n, long(n) - k));
      if (n >= 1)
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

// Independent oracle: solve the quadratic recursion
// -n B_n = sum_{k=1}^n C(n,k) B_k B_{n-k} + n B_{n-1} upward from B_0 = 1
// with a different evaluation order than the production code.
static std::vector<Rational> oracle_bernoulli(std::size_t max) {
  std::vector<Rational> b{Rational(1)};
  for (std::size_t n = 1; n <= max; ++n) {
    // Move the k = n term (which is B_n itself) to the left side.
    Rational rhs = Rational(long(n)) * b[n - 1];
    for (std::size_t k = n - 1; k >= 1; --k)
      rhs += binomial(n, long(k)) * b[k] * b[n - k];
    b.push_back(rhs / Rational(-(long(n) + 1)));
  }
  return b;
}

TEST_CASE("bernoulli matches the recursion oracle") {
  auto expected = oracle_bernoulli(30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(bernoulli(n) == expected[n]);
}

TEST_CASE("bernoulli frozen low-order values") {
  // Frozen from the recursion oracle above.
  CHECK(to_string(bernoulli(0)) == "1");
  CHECK(to_string(bernoulli(1)) == "-1/2");
  CHECK(to_string(bernoulli(2)) == "1/6");
  CHECK(to_string(bernoulli(3)) == "0");
  CHECK(to_string(bernoulli(4)) == "-1/30");
  CHECK(to_string(bernoulli(5)) == "0");
  CHECK(to_string(bernoulli(6)) == "1/42");
}

TEST_CASE("bernoulli odd vanishing") {
  for (std::size_t n = 3; n <= 59; n += 2) CHECK(is_zero(bernoulli(n)));
}

TEST_CASE("bernoulli recursion residual vanishes through 60") {
  for (unsigned n = 1; n <= 60; ++n) CHECK(is_zero(recursion_residual(n)));
}

TEST_CASE("bernoulli table helper") {
  auto table = bernoulli_table(6);
  REQUIRE(table.size() == 7);
  CHECK(table[0] == rational(1));
  CHECK(table[4] == rational(-1, 30));
}

TEST_CASE("factorial-binomial identity linking the two c-coefficient forms") {
  for (unsigned p = 0; p <= 30; ++p)
    for (unsigned q = 0; p + q <= 30; ++q) {
      Rational lhs = bernoulli(p + q) / factorial(p + q) * binomial(p + q, long(q));
      Rational rhs = bernoulli(p + q) / (factorial(p) * factorial(q));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("bernoulli memo table is consistent under concurrent access") {
  std::vector<Rational> expected = bernoulli_table(120);
  std::vector<std::vector<Rational>> got(8);
#pragma omp parallel for
  for (int t = 0; t < 8; ++t) {
    std::vector<Rational> local;
    for (std::size_t n = 0; n <= 120; ++n) local.push_back(bernoulli(n));
    got[std::size_t(t)] = std::move(local);
  }
  for (const auto& local : got)
    for (std::size_t n = 0; n <= 120; ++n) CHECK(local[n] == expected[n]);
}
