#pragma once

#include <cstdint>

#include "qfgaps/characters.hpp"
#include "qfgaps/rational.hpp"

namespace qfg {

/// A real number together with a bound on its truncation/rounding error.
struct TruncatedValue {
  double value = 0;
  double error_bound = 0;
  std::uint64_t terms_used = 0;
};

/// coefficient * pi, kept exact.
struct PiMultiple {
  Rational coefficient;
  double value() const;
};

/// Local factor 1 + sum_{d>=1} rho(p^d) lambda_a(p^d) p^{-ds} at an odd prime p.
/// lambda_a(p^d) is constant for d > nu_p(a), so the tail is summed as a
/// geometric series; the only error is floating rounding.
TruncatedValue euler_factor(const DirichletCharacter& rho, std::int64_t a, std::uint64_t p, double s);

/// L(s, chi) for real s >= 1 (chi non-trivial when s = 1). Exact head sum up to
/// a multiple of the modulus plus an Euler-Maclaurin tail on each residue
/// class, with the Euler-Maclaurin remainder as error bound.
TruncatedValue l_value(const DirichletCharacter& chi, double s, double eps);

/// beta(psi, a) = sum_d psi(d) eta_a(d) / d^2 for real non-trivial psi of even
/// modulus b >= 4. Evaluated through its Euler product: away from the odd
/// primes dividing a the local factors coincide with those of
/// L(1, psi) / L(2, psi chi4), so only finitely many factors are taken explicitly.
TruncatedValue beta(const DirichletCharacter& psi, std::int64_t a, double eps);

/// eta*(psi, a) = sum over j in [1, b] with psi(j - a) = 1 of pi eta_j(b) / (2 b^2).
PiMultiple eta_star(const DirichletCharacter& psi, std::int64_t a);

/// Slope beta(psi, a) * eta*(psi, a) of the shifted correlation sum.
TruncatedValue main_term(const DirichletCharacter& psi, std::int64_t a, double eps);

/// The divisor t of a built from exactly the primes of a that divide k.
std::uint64_t p_part(std::uint64_t a, std::uint64_t k);

/// L(1,rho) L(1,psi) / L(2, rho psi) * sum_{d | a} psi(d) rho(d) / d, for
/// primitive psi, rho of the same modulus k > 1 and a >= 1.
TruncatedValue muller_c(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a, double eps);

/// k^{-1} sum_{t | P(a,k)} t^{-1} sum_{j=1}^{k} psi(j) rho(a/t + j); exact.
Rational muller_bracket(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a);

/// Slope of sum_{n<=x} F_psi(n) F_rho(n+a) for primitive real psi, rho mod k > 1.
TruncatedValue muller_main(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a,
                           double eps);

/// Partial sum to N of sum_n rho(n) lambda_a(n) / n^s (s > 0, rho non-trivial of
/// even modulus). The error bound comes from partial summation against the
/// empirical constant K = max_{2<=x<=N} |sum_{n<=x} rho(n) eta_a(n)| / (x log x);
/// it is a diagnostic, not a proof.
TruncatedValue dirichlet_series_g(const DirichletCharacter& rho, std::int64_t a, double s, std::uint64_t terms);

}  // namespace qfg
