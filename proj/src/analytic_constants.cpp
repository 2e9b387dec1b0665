#include "qfgaps/analytic_constants.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qfgaps/arith.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/local_densities.hpp"

namespace qfg {
namespace {

using ld = long double;

constexpr ld kRound = LDBL_EPSILON;

// Relative error of a product/quotient of approximations.
double quotient_error(double value, std::initializer_list<TruncatedValue> numer,
                      std::initializer_list<TruncatedValue> denom) {
  ld grow = 1;
  for (const auto& t : numer) grow *= 1 + static_cast<ld>(t.error_bound) / std::fabs(static_cast<ld>(t.value));
  for (const auto& t : denom) {
    const ld rel = static_cast<ld>(t.error_bound) / std::fabs(static_cast<ld>(t.value));
    if (rel >= 1) return INFINITY;
    grow /= 1 - rel;
  }
  return static_cast<double>(std::fabs(static_cast<ld>(value)) * (grow - 1)) +
         4 * DBL_EPSILON * std::fabs(value);
}

void require_real_even_character(const DirichletCharacter& psi) {
  if (!psi.is_real()) throw std::invalid_argument("character must be real");
  if (psi.is_trivial()) throw std::invalid_argument("character must be non-trivial");
  if (psi.modulus() % 2 != 0 || psi.modulus() < 4) {
    throw std::invalid_argument("character modulus must be even and at least 4");
  }
}

// Rising factorial s (s+1) ... (s+j-1).
ld rising(ld s, unsigned j) {
  ld r = 1;
  for (unsigned i = 0; i < j; ++i) r *= s + i;
  return r;
}

}  // namespace

double PiMultiple::value() const { return coefficient.to_double() * std::numbers::pi; }

TruncatedValue euler_factor(const DirichletCharacter& rho, std::int64_t a, std::uint64_t p, double s) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("euler_factor: p must be an odd prime");
  if (a == 0) throw std::invalid_argument("euler_factor: a must be non-zero");
  if (!(s > 0.5)) throw std::invalid_argument("euler_factor: s must exceed 1/2");
  const int c = rho(static_cast<std::int64_t>(p));
  if (c == 0) return {1.0, 0.0, 0};
  const unsigned v = std::get<unsigned>(nu(p, a));
  const ld ratio = static_cast<ld>(c) * std::pow(static_cast<ld>(p), -static_cast<ld>(s));
  ld sum = 1;
  ld magnitude = 1;
  ld power = 1;
  for (unsigned d = 1; d <= v; ++d) {
    power *= ratio;
    const ld term = power * lambda_prime_power(p, d, a).to_long_double();
    sum += term;
    magnitude += std::fabs(term);
  }
  const ld tail_lambda = lambda_prime_power(p, v + 1, a).to_long_double();
  const ld tail = tail_lambda * power * ratio / (1 - ratio);
  sum += tail;
  magnitude += std::fabs(tail);
  return {static_cast<double>(sum), static_cast<double>(16 * kRound * magnitude) + DBL_EPSILON * std::fabs(static_cast<double>(sum)),
          v + 1};
}

TruncatedValue l_value(const DirichletCharacter& chi, double s, double eps) {
  if (!(s >= 1)) throw std::invalid_argument("l_value: s must be >= 1");
  if (!(eps > 0)) throw std::invalid_argument("l_value: eps must be positive");
  if (s == 1 && chi.is_trivial()) throw std::invalid_argument("l_value: trivial character has a pole at s = 1");
  const std::uint64_t k = chi.modulus();
  const ld sl = s;
  // Euler-Maclaurin with Bernoulli numbers B2..B8.
  static constexpr ld kB[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30};
  constexpr unsigned kOrder = 4;
  const ld zeta8 = 1.0040773561979443L;

  std::uint64_t blocks = std::max<std::uint64_t>(1, (256 + k - 1) / k);
  for (;;) {
    const std::uint64_t head_terms = blocks * k;
    ld remainder = 0;
    for (std::uint64_t r = 1; r <= k; ++r) {
      if (chi(static_cast<std::int64_t>(r)) == 0) continue;
      const ld base = static_cast<ld>(head_terms + r);
      remainder += 2 * zeta8 / std::pow(2 * std::numbers::pi_v<ld>, 2 * kOrder) * rising(sl, 2 * kOrder - 1) *
                   std::pow(static_cast<ld>(k), 2 * kOrder - 1) * std::pow(base, -sl - (2 * kOrder - 1));
    }
    const ld rounding = 8 * kRound * static_cast<ld>(head_terms);
    if (remainder + rounding > eps / 2 && blocks < (std::uint64_t{1} << 40) / k) {
      blocks *= 2;
      continue;
    }
    ld head = 0;
    ld comp = 0;  // Kahan
    for (std::uint64_t n = 1; n <= head_terms; ++n) {
      const int c = chi(static_cast<std::int64_t>(n));
      if (c == 0) continue;
      const ld term = c * std::pow(static_cast<ld>(n), -sl);
      const ld y = term - comp;
      const ld t = head + y;
      comp = (t - head) - y;
      head = t;
    }
    ld tail = 0;
    for (std::uint64_t r = 1; r <= k; ++r) {
      const int c = chi(static_cast<std::int64_t>(r));
      if (c == 0) continue;
      // n = m k + r for m >= blocks.
      const ld base = static_cast<ld>(head_terms + r);
      const ld integral = s == 1 ? -std::log(base) / static_cast<ld>(k)
                                 : std::pow(base, 1 - sl) / (static_cast<ld>(k) * (sl - 1));
      ld piece = integral + std::pow(base, -sl) / 2;
      ld fact = 1;
      for (unsigned i = 1; i <= kOrder; ++i) {
        fact *= static_cast<ld>(2 * i - 1) * static_cast<ld>(2 * i);
        const unsigned order = 2 * i - 1;
        // g^{(order)}(m) = (-1)^order (s)_order k^order (mk + r)^{-s-order}
        const ld deriv = -rising(sl, order) * std::pow(static_cast<ld>(k), order) * std::pow(base, -sl - order);
        piece -= kB[i - 1] / fact * deriv;
      }
      tail += c * piece;
    }
    const ld value = head + tail;
    return {static_cast<double>(value),
            static_cast<double>(remainder + rounding) + DBL_EPSILON * std::fabs(static_cast<double>(value)),
            head_terms};
  }
}

TruncatedValue beta(const DirichletCharacter& psi, std::int64_t a, double eps) {
  require_real_even_character(psi);
  if (a == 0) throw std::invalid_argument("beta: a must be non-zero");
  if (!(eps > 0)) throw std::invalid_argument("beta: eps must be positive");
  const auto chi4 = DirichletCharacter::chi4();
  const double inner_eps = eps * 1e-3;
  const TruncatedValue l1 = l_value(psi, 1, inner_eps);
  const TruncatedValue l2 = l_value(psi * chi4, 2, inner_eps);

  // Local factors at odd p | a, divided by the matching L-function factors.
  ld correction = 1;
  ld correction_err = 0;
  const std::uint64_t abs_a = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  for (const auto& [p, e] : factorize(abs_a).factors) {
    if (p == 2) continue;
    const int c = psi(static_cast<std::int64_t>(p));
    if (c == 0) continue;
    const TruncatedValue gp = euler_factor(psi, a, p, 1.0);
    const ld pl = static_cast<ld>(p);
    const ld l_factor = (1 - c * chi4(static_cast<std::int64_t>(p)) / (pl * pl)) / (1 - c / pl);
    correction *= static_cast<ld>(gp.value) / l_factor;
    correction_err += gp.error_bound / std::fabs(gp.value);
  }
  const double value = static_cast<double>(static_cast<ld>(l1.value) / static_cast<ld>(l2.value) * correction);
  TruncatedValue corr{static_cast<double>(correction), static_cast<double>(correction_err * std::fabs(correction)), 0};
  const double err = quotient_error(value, {l1, corr}, {l2});
  if (err > eps) throw BudgetError("beta: could not reach requested accuracy");
  return {value, err, l1.terms_used + l2.terms_used};
}

PiMultiple eta_star(const DirichletCharacter& psi, std::int64_t a) {
  require_real_even_character(psi);
  const std::uint64_t b = psi.modulus();
  Rational sum(0);
  for (std::uint64_t j = 1; j <= b; ++j) {
    if (psi(static_cast<std::int64_t>(j) - a) != 1) continue;
    sum += Rational(static_cast<std::int64_t>(eta(static_cast<std::int64_t>(j), b)));
  }
  const auto bs = static_cast<std::int64_t>(b);
  return {sum / Rational(2 * bs * bs)};
}

TruncatedValue main_term(const DirichletCharacter& psi, std::int64_t a, double eps) {
  const PiMultiple star = eta_star(psi, a);
  const double scale = star.value();
  const TruncatedValue b = beta(psi, a, scale > 0 ? eps / scale : eps);
  const double value = b.value * scale;
  return {value, b.error_bound * scale + 2 * DBL_EPSILON * std::fabs(value), b.terms_used};
}

std::uint64_t p_part(std::uint64_t a, std::uint64_t k) {
  if (a == 0) throw std::invalid_argument("p_part: a must be positive");
  if (k < 2) throw std::invalid_argument("p_part: k must exceed 1");
  std::uint64_t t = 1;
  for (const auto& [p, e] : factorize(a).factors) {
    if (k % p == 0) t *= ipow(p, e);
  }
  return t;
}

namespace {

void require_muller_pair(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a) {
  if (psi.modulus() != rho.modulus() || psi.modulus() < 2) {
    throw std::invalid_argument("characters must share a modulus k > 1");
  }
  if (!psi.is_primitive() || !rho.is_primitive()) throw std::invalid_argument("characters must be primitive");
  if (a < 1) throw std::invalid_argument("shift a must be >= 1");
}

}  // namespace

TruncatedValue muller_c(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a, double eps) {
  require_muller_pair(psi, rho, a);
  Rational dsum(0);
  for (std::uint64_t d : divisors(factorize(a))) {
    const auto ds = static_cast<std::int64_t>(d);
    dsum += Rational(psi(ds) * rho(ds), ds);
  }
  const double inner = eps * 1e-3;
  const TruncatedValue l_rho = l_value(rho, 1, inner);
  const TruncatedValue l_psi = l_value(psi, 1, inner);
  const TruncatedValue l_prod = l_value(rho * psi, 2, inner);
  const double value = static_cast<double>(static_cast<ld>(l_rho.value) * l_psi.value / l_prod.value *
                                           dsum.to_long_double());
  const double err = quotient_error(value, {l_rho, l_psi}, {l_prod});
  return {value, err, l_rho.terms_used + l_psi.terms_used + l_prod.terms_used};
}

Rational muller_bracket(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a) {
  require_muller_pair(psi, rho, a);
  const std::uint64_t k = psi.modulus();
  Rational total(0);
  for (std::uint64_t t : divisors(factorize(p_part(a, k)))) {
    std::int64_t inner = 0;
    for (std::uint64_t j = 1; j <= k; ++j) {
      inner += psi(static_cast<std::int64_t>(j)) * rho(static_cast<std::int64_t>(a / t + j));
    }
    total += Rational(inner, static_cast<std::int64_t>(t));
  }
  return total / Rational(static_cast<std::int64_t>(k));
}

TruncatedValue muller_main(const DirichletCharacter& psi, const DirichletCharacter& rho, std::uint64_t a,
                           double eps) {
  const Rational bracket = muller_bracket(psi, rho, a);
  const double scale = 1 + std::fabs(bracket.to_double());
  // Real characters are self-conjugate, so both C terms coincide.
  const TruncatedValue c = muller_c(psi, rho, a, eps / scale);
  const double value = c.value * (1 + bracket.to_double());
  return {value, c.error_bound * scale + 2 * DBL_EPSILON * std::fabs(value), c.terms_used};
}

TruncatedValue dirichlet_series_g(const DirichletCharacter& rho, std::int64_t a, double s, std::uint64_t terms) {
  if (rho.is_trivial()) throw std::invalid_argument("dirichlet_series_g: character must be non-trivial");
  if (rho.modulus() % 2 != 0) throw std::invalid_argument("dirichlet_series_g: modulus must be even");
  if (!(s > 0)) throw std::invalid_argument("dirichlet_series_g: s must be positive");
  if (a == 0) throw std::invalid_argument("dirichlet_series_g: a must be non-zero");
  if (terms < 2) throw std::invalid_argument("dirichlet_series_g: need at least two terms");
  ld sum = 0;
  ld partial = 0;  // sum_{n<=x} rho(n) eta_a(n)
  ld k_fit = 0;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const int c = rho(static_cast<std::int64_t>(n));
    if (c != 0) {
      const ld e = static_cast<ld>(eta(a, n));
      partial += c * e;
      sum += c * e * std::pow(static_cast<ld>(n), -static_cast<ld>(s) - 1);
    }
    if (n >= 2) {
      const ld x = static_cast<ld>(n);
      k_fit = std::max(k_fit, std::fabs(partial) / (x * std::log(x)));
    }
  }
  const ld nn = static_cast<ld>(terms);
  const ld sl = s;
  const ld lg = std::log(nn);
  const ld ns = std::pow(nn, sl);
  const ld tail = k_fit * (lg / ns + (sl + 1) * (lg / (sl * ns) + 1 / (sl * sl * ns)));
  return {static_cast<double>(sum), static_cast<double>(tail), terms};
}

}  // namespace qfg
