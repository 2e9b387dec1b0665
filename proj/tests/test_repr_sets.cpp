#include <doctest.h>

#include <stdexcept>

#include "qfgaps/arith.hpp"
#include "qfgaps/characters.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/repr_sets.hpp"

using namespace qfg;

namespace {
std::vector<std::uint64_t> members(const SetId& s, std::uint64_t lo, std::uint64_t hi) {
  const auto bits = sieve_members(s, lo, hi);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (bits[n - lo]) out.push_back(n);
  return out;
}

// p = 3 mod 4 to an odd power rules n out of sums of two squares
bool square2_by_exponents(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n).factors)
    if (p % 4 == 3 && e % 2 == 1) return false;
  return true;
}
}  // namespace

TEST_CASE("r2 and R2 examples") {
  CHECK(r2(5) == 8);
  CHECK(r2(3) == 0);
  CHECK(r2(25) == 12);
  CHECK(R2(1) == 6);
  CHECK(R2(3) == 6);
  CHECK(R2(7) == 12);
  for (auto mode : {ReprMode::Formula, ReprMode::Enumerate}) {
    CHECK(r2(25, mode) == 12);
    CHECK(R2(3, mode) == 6);
  }
  CHECK_THROWS_AS(r2(0), std::invalid_argument);
}

TEST_CASE("ideal counts") {
  CHECK(ideal_count(7, -3) == 2);
  CHECK(ideal_count(1, 5) == 1);
  CHECK(ideal_count(3, -3) == 1);
  CHECK_THROWS_AS(ideal_count(3, 9), std::invalid_argument);
}

TEST_CASE("membership examples") {
  CHECK_FALSE(is_member(SetId::square2(), 3));
  CHECK(is_member(SetId::triangle(), 7));
  CHECK(is_member(SetId::triangle_star(), 4));
  CHECK(is_member(SetId::triangle_star(), 3));
  CHECK_FALSE(is_member(SetId::triangle_star(), 5));
  CHECK(is_member(SetId::square2(), 0));
  CHECK(is_member(SetId::triangle(), 0));
  CHECK(is_member(SetId::triangle_star(), 0));
  CHECK_FALSE(is_member(SetId::diamond(-4), 0));
  CHECK(is_member(SetId::diamond(-4), 5));
  CHECK_FALSE(is_member(SetId::diamond(-4), 3));
  CHECK(members(SetId::square2(), 1, 10) == std::vector<std::uint64_t>{1, 2, 4, 5, 8, 9, 10});
  CHECK(members(SetId::triangle(), 1, 10) == std::vector<std::uint64_t>{1, 3, 4, 7, 9});
  CHECK(members(SetId::square2(), 0, 0) == std::vector<std::uint64_t>{0});
}

TEST_CASE("set ids") {
  CHECK(SetId::parse("square2") == SetId::square2());
  CHECK(SetId::parse("triangle_star") == SetId::triangle_star());
  CHECK(SetId::parse("diamond:-7").name() == "diamond:-7");
  CHECK_THROWS_AS(SetId::parse("diamond:-9"), std::invalid_argument);
  CHECK_THROWS_AS(SetId::parse("circle"), std::invalid_argument);
}

TEST_CASE("formula and enumeration agree") {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    REQUIRE(r2(n, ReprMode::Formula) == r2(n, ReprMode::Enumerate));
    REQUIRE(R2(n, ReprMode::Formula) == R2(n, ReprMode::Enumerate));
    REQUIRE(R2(n) == 6 * ideal_count(n, -3));
  }
}

TEST_CASE("sieve agrees with per-n membership") {
  const std::vector<SetId> sets{SetId::square2(), SetId::triangle(), SetId::triangle_star(), SetId::diamond(-4),
                                SetId::diamond(5), SetId::diamond(-3)};
  for (const auto& s : sets) {
    CAPTURE(s.name());
    for (std::uint64_t lo : {0ull, 1ull, 999'990'000ull}) {
      const auto bits = sieve_members(s, lo, lo + 5000);
      for (std::uint64_t n = lo; n <= lo + 5000; ++n) REQUIRE(bits[n - lo] == is_member(s, n));
    }
  }
  CHECK_THROWS_AS(sieve_members(SetId::square2(), 0, kMaxWindow), BudgetError);
}

TEST_CASE("set relations") {
  const std::uint64_t top = 100000;
  const auto sq = sieve_members(SetId::square2(), 0, top);
  const auto tri = sieve_members(SetId::triangle(), 0, top);
  const auto star = sieve_members(SetId::triangle_star(), 0, top);
  const auto dia4 = sieve_members(SetId::diamond(-4), 0, top);
  const auto dia3 = sieve_members(SetId::diamond(-3), 0, top);
  for (std::uint64_t n = 1; n <= top; ++n) {
    REQUIRE(sq[n] == square2_by_exponents(n));
    REQUIRE(sq[n] == (r2(n) > 0));
    REQUIRE(tri[n] == (R2(n) > 0));
    REQUIRE((!star[n] || tri[n]));
    REQUIRE(dia4[n] == sq[n]);
    REQUIRE(dia3[n] == tri[n]);
  }
}

TEST_CASE("representation divisor sums are non-negative") {
  for (const auto& chi : {DirichletCharacter::chi4(), DirichletCharacter::chi3()}) {
    const auto table = divisor_sum_table(chi, 1000000);
    for (std::uint64_t n = 1; n <= 1000000; ++n) REQUIRE(table[n] >= 0);
  }
}
