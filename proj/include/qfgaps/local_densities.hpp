#pragma once

#include <cstdint>
#include <span>

#include "qfgaps/rational.hpp"

namespace qfg {

/// Largest modulus eta_brute accepts (its cost is O(q) time and memory).
inline constexpr std::uint64_t kEtaBruteLimit = std::uint64_t{1} << 24;

/// #{1 <= alpha, beta <= q : alpha^2 + beta^2 = a (mod q)}, counted directly
/// from the table of squares mod q. Independent of the multiplicative route.
std::uint64_t eta_brute(std::int64_t a, std::uint64_t q);

/// lambda_a(p^j) = eta_a(p^j) / p^j. Closed forms for odd p (split by p mod 4,
/// nu_p(a) and the parity of j); counted directly for p = 2. Requires a != 0.
Rational lambda_prime_power(std::uint64_t p, unsigned j, std::int64_t a);

/// eta_a(q) assembled multiplicatively from prime-power factors. Prime powers
/// p^j with p^j | a fall back to direct counting when a = 0.
std::uint64_t eta(std::int64_t a, std::uint64_t q);

/// lambda_a(q) = eta_a(q) / q.
Rational lambda(std::int64_t a, std::uint64_t q);

struct LambdaBar {
  Rational value;  // (lambda_a * mu)(n)
  std::int64_t f;  // n * value, always an integer
};

/// Moebius convolution of lambda_a evaluated at n.
LambdaBar lambda_bar(std::int64_t a, std::uint64_t n);

/// pi * eta_a(q) * x / (4 q^2): main term of the progression sum of F_chi4.
double tolev_main(std::uint64_t q, std::int64_t a, double x);

/// Sum of F_chi4(n) over 1 <= n <= x with n = a (mod q).
std::int64_t progression_sum(std::uint64_t q, std::int64_t a, std::uint64_t x);

/// Same, reading F_chi4 from a precomputed table (entry n = F_chi4(n), size > x).
std::int64_t progression_sum(std::span<const std::int32_t> f_chi4, std::uint64_t q, std::int64_t a,
                             std::uint64_t x);

}  // namespace qfg
