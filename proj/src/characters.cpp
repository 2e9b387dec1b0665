#include "qfgaps/characters.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>

#include "qfgaps/arith.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/parallel.hpp"

namespace qfg {
namespace {

constexpr std::uint64_t kWindowChunk = std::uint64_t{1} << 20;

std::atomic<std::uint64_t>& table_limit() {
  static std::atomic<std::uint64_t> limit{std::uint64_t{1} << 28};
  return limit;
}

bool squarefree(std::uint64_t n) {
  for (const auto& pp : factorize(n).factors) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

// Primitive iff no proper divisor d of k has chi trivial on units = 1 mod d.
bool compute_primitive(std::span<const std::int8_t> v) {
  const std::uint64_t k = v.size();
  if (k == 1) return true;
  for (std::uint64_t d : divisors(factorize(k))) {
    if (d == k) continue;
    bool induced = true;
    for (std::uint64_t n = 1; n < k && induced; n += d) {
      if (std::gcd(n, k) == 1 && v[n] != 1) induced = false;
    }
    if (induced) return false;
  }
  return true;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::vector<std::int8_t> values, std::string id)
    : values_(std::move(values)), id_(std::move(id)) {
  const std::uint64_t k = values_.size();
  trivial_ = true;
  for (std::uint64_t r = 0; r < k; ++r) {
    if (std::gcd(r, k) == 1 && values_[r] != 1) trivial_ = false;
  }
  primitive_ = compute_primitive(values_);
}

DirichletCharacter DirichletCharacter::chi3() { return from_table(3, {0, 1, -1}, "chi3"); }

DirichletCharacter DirichletCharacter::chi4() { return from_table(4, {0, 1, 0, -1}, "chi4"); }

DirichletCharacter DirichletCharacter::chi6() { return from_table(6, {0, 1, 0, 0, 0, -1}, "chi6"); }

DirichletCharacter DirichletCharacter::trivial(std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("trivial character: modulus must be >= 1");
  std::vector<int> v(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) v[r] = std::gcd(r, modulus) == 1 ? 1 : 0;
  return from_table(modulus, std::move(v), "trivial:" + std::to_string(modulus));
}

DirichletCharacter DirichletCharacter::kronecker(std::int64_t discriminant) {
  if (!is_fundamental_discriminant(discriminant)) {
    throw std::invalid_argument("kronecker: " + std::to_string(discriminant) + " is not a fundamental discriminant");
  }
  const std::uint64_t k = discriminant < 0 ? -discriminant : discriminant;
  // Multiplicativity holds by construction; skip the quadratic table check.
  std::vector<std::int8_t> v(k);
  for (std::uint64_t r = 0; r < k; ++r) {
    v[r] = static_cast<std::int8_t>(kronecker_symbol(discriminant, static_cast<std::int64_t>(r)));
  }
  return DirichletCharacter(std::move(v), "kronecker:" + std::to_string(discriminant));
}

DirichletCharacter DirichletCharacter::from_table(std::uint64_t modulus, std::vector<int> values, std::string id) {
  if (modulus == 0 || values.size() != modulus) {
    throw std::invalid_argument("character table must have exactly `modulus` entries");
  }
  std::vector<std::int8_t> v(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) {
    const int x = values[r];
    if (x < -1 || x > 1) throw std::invalid_argument("character values must lie in {-1, 0, 1}");
    if ((x == 0) != (std::gcd(r, modulus) > 1)) {
      throw std::invalid_argument("character must vanish exactly on residues sharing a factor with the modulus");
    }
    v[r] = static_cast<std::int8_t>(x);
  }
  for (std::uint64_t r = 0; r < modulus; ++r) {
    for (std::uint64_t s = r; s < modulus; ++s) {
      if (v[r * s % modulus] != v[r] * v[s]) throw std::invalid_argument("character table is not multiplicative");
    }
  }
  if (id.empty()) id = "table:" + std::to_string(modulus);
  return DirichletCharacter(std::move(v), std::move(id));
}

DirichletCharacter DirichletCharacter::parse(std::string_view text) {
  if (text == "chi3") return chi3();
  if (text == "chi4") return chi4();
  if (text == "chi6") return chi6();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string head(text.substr(0, colon));
    const std::string tail(text.substr(colon + 1));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tail.size() && used > 0) {
      if (head == "trivial" && v >= 1) return trivial(static_cast<std::uint64_t>(v));
      if (head == "kronecker") return kronecker(v);
    }
  }
  throw std::invalid_argument("unknown character '" + std::string(text) + "'");
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  const std::uint64_t k = std::lcm(a.modulus(), b.modulus());
  std::vector<std::int8_t> v(k);
  for (std::uint64_t r = 0; r < k; ++r) {
    v[r] = static_cast<std::int8_t>(a(static_cast<std::int64_t>(r)) * b(static_cast<std::int64_t>(r)));
  }
  return DirichletCharacter(std::move(v), a.id() + "*" + b.id());
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  const std::int64_t m4 = ((d % 4) + 4) % 4;
  const std::uint64_t ad = d < 0 ? -d : d;
  if (m4 == 1) return squarefree(ad);
  if (m4 != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t mm = ((m % 4) + 4) % 4;
  if (mm != 2 && mm != 3) return false;
  return squarefree(m < 0 ? -m : m);
}

int kronecker_symbol(std::int64_t d, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("kronecker_symbol: n must be non-negative");
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  // factor 2 of n
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t dm8 = ((d % 8) + 8) % 8;
    if (dm8 % 2 == 0) return 0;
    if (dm8 == 3 || dm8 == 5) result = -result;
  }
  // Jacobi symbol (d / n) for odd n > 0
  std::int64_t a = d % n;
  if (a < 0) a += n;
  std::int64_t m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

std::int64_t divisor_sum(const DirichletCharacter& psi, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_sum: n must be positive");
  std::int64_t s = 0;
  for (std::uint64_t d : divisors(factorize(n))) s += psi(static_cast<std::int64_t>(d));
  return s;
}

std::int64_t divisor_sum_sqrt(const DirichletCharacter& psi, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_sum_sqrt: n must be positive");
  if (psi(static_cast<std::int64_t>(n)) != 1) throw std::invalid_argument("divisor_sum_sqrt: requires psi(n) = 1");
  const std::uint64_t r = isqrt(n);
  std::int64_t s = 0;
  for (std::uint64_t d = 1; d <= r; ++d) {
    if (d * d == n) break;
    if (n % d == 0) s += psi(static_cast<std::int64_t>(d));
  }
  s *= 2;
  if (r * r == n) s += psi(static_cast<std::int64_t>(r));
  return s;
}

std::uint64_t divisor_sum_table_limit() { return table_limit().load(); }

void set_divisor_sum_table_limit(std::uint64_t limit) { table_limit().store(limit); }

std::vector<std::int32_t> divisor_sum_table(const DirichletCharacter& psi, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("divisor_sum_table: x must be positive");
  if (x > divisor_sum_table_limit()) {
    throw BudgetError("divisor_sum_table: x = " + std::to_string(x) + " exceeds table limit " +
                      std::to_string(divisor_sum_table_limit()));
  }
  std::vector<std::int32_t> table(x + 1, 0);
  for (std::uint64_t d = 1; d <= x; ++d) {
    const int c = psi(static_cast<std::int64_t>(d));
    if (c == 0) continue;
    for (std::uint64_t m = d; m <= x; m += d) table[m] += c;
  }
  return table;
}

std::vector<std::int32_t> divisor_sum_window(const DirichletCharacter& psi, std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 || hi < lo) throw std::invalid_argument("divisor_sum_window: need 1 <= lo <= hi");
  if (hi - lo + 1 > divisor_sum_table_limit()) throw BudgetError("divisor_sum_window: window exceeds table limit");
  const auto primes = primes_up_to(isqrt(hi));
  auto local = [&psi](std::uint64_t p, unsigned e) -> std::int32_t {
    const int c = psi(static_cast<std::int64_t>(p % psi.modulus()));
    if (c == 0) return 1;
    if (c == 1) return static_cast<std::int32_t>(e + 1);
    return (e % 2 == 0) ? 1 : 0;
  };
  const std::uint64_t len = hi - lo + 1;
  const std::size_t chunks = (len + kWindowChunk - 1) / kWindowChunk;
  std::vector<std::int32_t> out(len);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t a = lo + c * kWindowChunk;
    const std::uint64_t b = std::min(hi, a + kWindowChunk - 1);
    auto part = sieve_multiplicative<std::int32_t>(a, b, local, primes);
    std::copy(part.begin(), part.end(), out.begin() + static_cast<std::ptrdiff_t>(a - lo));
  });
  return out;
}

}  // namespace qfg
