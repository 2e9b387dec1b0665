#include "qfgaps/local_densities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qfgaps/arith.hpp"
#include "qfgaps/characters.hpp"
#include "qfgaps/errors.hpp"

namespace qfg {
namespace {

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t q) {
  const auto m = static_cast<std::int64_t>(q);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

int chi4(std::uint64_t p) { return p % 4 == 1 ? 1 : (p % 4 == 3 ? -1 : 0); }

Rational odd_prime_lambda(std::uint64_t p, unsigned j, unsigned v) {
  const auto ps = static_cast<std::int64_t>(p);
  if (v == 0) return Rational(1) - Rational(chi4(p), ps);
  if (p % 4 == 1) {
    const Rational unit = Rational(1) - Rational(1, ps);
    if (j <= v) return Rational(1) + Rational(j) * unit;
    return Rational(1 + v) * unit;
  }
  if (j <= v) return j % 2 == 1 ? Rational(1, ps) : Rational(1);
  return v % 2 == 0 ? Rational(1) + Rational(1, ps) : Rational(0);
}

}  // namespace

std::uint64_t eta_brute(std::int64_t a, std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("eta_brute: q must be positive");
  if (q > kEtaBruteLimit) throw BudgetError("eta_brute: q exceeds oracle budget");
  // square residues counted with multiplicity; alpha^2 stepped by 2 alpha + 1 to avoid division
  std::vector<std::uint32_t> squares(q, 0);
  std::uint64_t sq = 0;
  for (std::uint64_t alpha = 0; alpha < q; ++alpha) {
    ++squares[sq];
    sq += 2 * alpha + 1;
    while (sq >= q) sq -= q;
  }
  const std::uint64_t target = reduce_mod(a, q);
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < q; ++s) {
    if (squares[s] == 0) continue;
    const std::uint64_t t = target >= s ? target - s : target + q - s;
    count += std::uint64_t{squares[s]} * squares[t];
  }
  return count;
}

Rational lambda_prime_power(std::uint64_t p, unsigned j, std::int64_t a) {
  if (!is_prime(p)) throw std::invalid_argument("lambda_prime_power: p must be prime");
  if (j == 0) throw std::invalid_argument("lambda_prime_power: j must be positive");
  if (a == 0) throw std::invalid_argument("lambda_prime_power: a must be non-zero");
  if (p == 2) {
    if (j > 24) throw BudgetError("lambda_prime_power: 2^j beyond direct-count budget");
    const std::uint64_t q = std::uint64_t{1} << j;
    return Rational(static_cast<std::int64_t>(eta_brute(a, q)), static_cast<std::int64_t>(q));
  }
  const unsigned v = std::get<unsigned>(nu(p, a));
  return odd_prime_lambda(p, j, v);
}

std::uint64_t eta(std::int64_t a, std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("eta: q must be positive");
  Rational product(1);
  for (const auto& [p, j] : factorize(q).factors) {
    const std::uint64_t pj = ipow(p, j);
    if (a == 0) {
      product *= Rational(static_cast<std::int64_t>(eta_brute(0, pj)));
    } else {
      product *= lambda_prime_power(p, j, a) * Rational(static_cast<std::int64_t>(pj));
    }
  }
  if (!product.is_integer() || product.num() < 0) {
    throw InvariantError("eta: multiplicative assembly gave non-integer " + product.str() + " for a = " +
                         std::to_string(a) + ", q = " + std::to_string(q));
  }
  return static_cast<std::uint64_t>(product.num());
}

Rational lambda(std::int64_t a, std::uint64_t q) {
  return Rational(static_cast<std::int64_t>(eta(a, q)), static_cast<std::int64_t>(q));
}

LambdaBar lambda_bar(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("lambda_bar: n must be positive");
  Rational sum(0);
  for (std::uint64_t d : divisors(factorize(n))) {
    const int mu = mobius(n / d);
    if (mu != 0) sum += Rational(mu) * lambda(a, d);
  }
  const Rational f = sum * Rational(static_cast<std::int64_t>(n));
  if (!f.is_integer()) throw InvariantError("lambda_bar: n * value is not an integer");
  return {sum, f.num()};
}

double tolev_main(std::uint64_t q, std::int64_t a, double x) {
  if (q == 0) throw std::invalid_argument("tolev_main: q must be positive");
  const auto qd = static_cast<double>(q);
  return std::numbers::pi * static_cast<double>(eta(a, q)) * x / (4.0 * qd * qd);
}

std::int64_t progression_sum(std::span<const std::int32_t> f_chi4, std::uint64_t q, std::int64_t a,
                             std::uint64_t x) {
  if (q == 0) throw std::invalid_argument("progression_sum: q must be positive");
  if (f_chi4.size() <= x) throw std::invalid_argument("progression_sum: table too short");
  std::uint64_t n = reduce_mod(a, q);
  if (n == 0) n = q;
  std::int64_t total = 0;
  for (; n <= x; n += q) total += f_chi4[n];
  return total;
}

std::int64_t progression_sum(std::uint64_t q, std::int64_t a, std::uint64_t x) {
  if (x == 0) return 0;
  const auto table = divisor_sum_table(DirichletCharacter::chi4(), x);
  return progression_sum(table, q, a, x);
}

}  // namespace qfg
