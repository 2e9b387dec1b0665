#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace qfg {

using i128 = __int128;
using u128 = unsigned __int128;

/// Upper limit accepted by factorize().
inline constexpr std::uint64_t kFactorLimit = std::uint64_t{1} << 63;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of `value`; primes strictly increasing.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  /// Exponent of p in value (0 when p does not divide it).
  unsigned exponent_of(std::uint64_t p) const;
};

/// Marker for nu_p(0).
struct Infinity {
  friend bool operator==(Infinity, Infinity) = default;
};

using Valuation = std::variant<unsigned, Infinity>;

bool is_prime(std::uint64_t n);

/// Trial division (wheel) up to 10^12, Pollard rho beyond. Rejects 0 and n > 2^63.
Factorization factorize(std::uint64_t n);

/// Largest t with p^t | w, Infinity for w == 0. Throws if p is not prime.
Valuation nu(std::uint64_t p, std::int64_t w);

/// All divisors of f.value, ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

int mobius(std::uint64_t n);
std::uint64_t tau(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
u128 isqrt(u128 n);
bool is_square(std::uint64_t n);
std::uint64_t gcd(std::int64_t a, std::int64_t b);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Primes <= limit by a plain Eratosthenes sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Evaluates a multiplicative function on every n in [lo, hi] (lo >= 1) by a
/// segmented factor sieve. `local(p, e)` gives the value at p^e.
template <class T, class Local>
std::vector<T> sieve_multiplicative(std::uint64_t lo, std::uint64_t hi, Local&& local,
                                    std::span<const std::uint64_t> base_primes) {
  const std::size_t len = hi - lo + 1;
  std::vector<std::uint64_t> rest(len);
  std::vector<T> out(len, T{1});
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;
  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    std::uint64_t first = (lo + p - 1) / p * p;
    for (std::uint64_t m = first; m <= hi; m += p) {
      const std::size_t i = m - lo;
      unsigned e = 0;
      while (rest[i] % p == 0) {
        rest[i] /= p;
        ++e;
      }
      out[i] = out[i] * local(p, e);
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) out[i] = out[i] * local(rest[i], 1u);
  }
  return out;
}

}  // namespace qfg
