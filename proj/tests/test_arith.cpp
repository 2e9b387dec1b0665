#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include <random>

#include "qfgaps/arith.hpp"
#include "qfgaps/rational.hpp"

using namespace qfg;

namespace {
std::uint64_t rebuild(const Factorization& f) {
  std::uint64_t v = 1;
  for (const auto& [p, e] : f.factors) v *= ipow(p, e);
  return v;
}
}  // namespace

TEST_CASE("factorize examples") {
  CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(9991).factors == std::vector<PrimePower>{{97, 1}, {103, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(kFactorLimit + 1), std::invalid_argument);
}

TEST_CASE("factorize above the trial-division range") {
  // 1000003 * 1000033, both prime
  const std::uint64_t n = 1000003ull * 1000033ull;
  CHECK(factorize(n).factors == std::vector<PrimePower>{{1000003, 1}, {1000033, 1}});
  const std::uint64_t big = 4611686018427387847ull;  // prime just under 2^62
  CHECK(is_prime(big));
  CHECK(factorize(2 * big).factors == std::vector<PrimePower>{{2, 1}, {big, 1}});
  CHECK(factorize(kFactorLimit).factors == std::vector<PrimePower>{{2, 63}});
}

TEST_CASE("factorize rebuilds random n") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = 1 + rng() % 1'000'000;
    const auto f = factorize(n);
    REQUIRE(rebuild(f) == n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      CHECK(is_prime(f.factors[k].prime));
      if (k > 0) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
    }
  }
}

TEST_CASE("nu") {
  CHECK(std::get<unsigned>(nu(3, 18)) == 2);
  CHECK(std::holds_alternative<Infinity>(nu(5, 0)));
  CHECK(std::get<unsigned>(nu(7, 10)) == 0);
  CHECK(std::get<unsigned>(nu(2, -48)) == 4);
  CHECK_THROWS_AS(nu(4, 8), std::invalid_argument);
}

TEST_CASE("divisors, mobius, tau") {
  CHECK(divisors(factorize(6)) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(divisors(factorize(1)) == std::vector<std::uint64_t>{1});
  CHECK(divisors(factorize(12)) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(tau(1) == 1);
  CHECK(tau(12) == 6);
  CHECK(tau(64) == 7);
  for (std::uint64_t n = 1; n <= 10000; ++n) REQUIRE(divisors(factorize(n)).size() == tau(n));
  for (std::uint64_t m = 1; m <= 1000; m += 7) {
    for (std::uint64_t n = 1; n <= 1000; n += 11) {
      if (std::gcd(m, n) == 1) REQUIRE(mobius(m * n) == mobius(m) * mobius(n));
    }
  }
}

TEST_CASE("isqrt and is_square") {
  CHECK(isqrt(std::uint64_t{0}) == 0);
  CHECK(isqrt(std::uint64_t{15}) == 3);
  CHECK(isqrt(std::uint64_t{16}) == 4);
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ull);
  const u128 big = static_cast<u128>(~std::uint64_t{0}) * ~std::uint64_t{0};
  CHECK(isqrt(big) == ~std::uint64_t{0});
  CHECK(isqrt(big - 1) == ~std::uint64_t{0} - 1);
  CHECK(is_square(0));
  CHECK(is_square(1'000'000'000'000ull));
  CHECK_FALSE(is_square(1'000'000'000'001ull));
}

TEST_CASE("primes and the multiplicative sieve") {
  const auto ps = primes_up_to(30);
  CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  const auto base = primes_up_to(1000);
  const auto t = sieve_multiplicative<std::uint64_t>(
      500000, 501000, [](std::uint64_t, unsigned e) { return std::uint64_t{e} + 1; }, base);
  for (std::uint64_t n = 500000; n <= 501000; ++n) REQUIRE(t[n - 500000] == tau(n));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(4, 3) - Rational(1) == Rational(1, 3));
  CHECK((Rational(9, 5) * Rational(5, 3)).str() == "3");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}
