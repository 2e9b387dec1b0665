#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "qfgaps/arith.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/local_densities.hpp"

using namespace qfg;

TEST_CASE("eta_brute examples") {
  CHECK(eta_brute(5, 5) == 9);
  CHECK(eta_brute(17, 1) == 1);
  CHECK(eta_brute(0, 2) == 2);
  CHECK_THROWS_AS(eta_brute(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(eta_brute(1, kEtaBruteLimit + 1), BudgetError);
}

TEST_CASE("lambda at prime powers") {
  CHECK(lambda_prime_power(5, 1, 5) == Rational(9, 5));
  CHECK(lambda_prime_power(3, 1, 3) == Rational(1, 3));
  CHECK(lambda_prime_power(3, 1, 1) == Rational(4, 3));
  CHECK_THROWS_AS(lambda_prime_power(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_prime_power(9, 1, 1), std::invalid_argument);
  for (std::uint64_t p : primes_up_to(50)) {
    for (unsigned j = 1; j <= 4; ++j) {
      const std::uint64_t q = ipow(p, j);
      for (std::int64_t a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        CAPTURE(p);
        CAPTURE(j);
        CAPTURE(a);
        REQUIRE(lambda_prime_power(p, j, a) ==
                Rational(static_cast<std::int64_t>(eta_brute(a, q)), static_cast<std::int64_t>(q)));
      }
    }
  }
}

TEST_CASE("eta examples and oracle") {
  CHECK(eta(5, 5) == 9);
  CHECK(eta(1, 3) == 4);
  CHECK(eta(1, 15) == eta(1, 3) * eta(1, 5));
  CHECK(eta(1, 15) == eta_brute(1, 15));
  for (std::uint64_t q = 1; q <= 120; ++q) {
    for (std::int64_t a = -20; a <= 20; ++a) {
      CAPTURE(q);
      CAPTURE(a);
      REQUIRE(eta(a, q) == eta_brute(a, q));
    }
  }
  // a multiple of q^2 goes down the brute path per prime power
  CHECK(eta(0, 36) == eta_brute(0, 36));
  CHECK(eta(72, 12) == eta_brute(72, 12));
}

TEST_CASE("lambda_bar") {
  CHECK(lambda_bar(7, 1).value == Rational(1));
  CHECK(lambda_bar(1, 3).value == Rational(1, 3));
  CHECK(lambda_bar(1, 3).f == 1);
  CHECK(lambda_bar(1, 9).value == Rational(0));
  for (std::int64_t a : {3, 9, 15, 45, 75}) {
    for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(a)).factors) {
      for (unsigned j = e + 2; j <= e + 6; ++j) CHECK(lambda_bar(a, ipow(p, j)).value == Rational(0));
    }
  }
}

TEST_CASE("lambda_bar odd support is bounded") {
  for (std::int64_t a : {1, 2, 3, 5, 6, 9, 12}) {
    const auto a2 = static_cast<std::uint64_t>(a * a);
    Rational worst(0);
    for (std::uint64_t d : divisors(factorize(a2))) worst = std::max(worst, abs(lambda_bar(a, d).value));
    const Rational cap = Rational(static_cast<std::int64_t>(a2)) * worst;
    for (std::uint64_t n = 1; n <= 10000; n += 2) {
      CAPTURE(a);
      CAPTURE(n);
      REQUIRE(Rational(std::llabs(lambda_bar(a, n).f)) <= cap);
    }
  }
}

TEST_CASE("tolev main term and progression sums") {
  CHECK(tolev_main(1, 0, 10) == doctest::Approx(std::numbers::pi / 4 * 10));
  CHECK(tolev_main(5, 5, 100) == doctest::Approx(9 * std::numbers::pi));
  CHECK(tolev_main(2, 0, 8) == doctest::Approx(std::numbers::pi));
  CHECK(progression_sum(1, 0, 10) == 9);  // 37 lattice points with x^2 + y^2 <= 10, less the origin, over 4
  CHECK(progression_sum(4, 3, 100) == 0);
  CHECK(progression_sum(2, 1, 10) == 4);
}
