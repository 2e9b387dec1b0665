#include "qfgaps/repr_sets.hpp"

#include <stdexcept>

#include "qfgaps/arith.hpp"
#include "qfgaps/characters.hpp"
#include "qfgaps/errors.hpp"
#include "qfgaps/parallel.hpp"

namespace qfg {
namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 20;

// Primes whose odd exponent excludes n from the set.
bool forbidden_prime(SetTag tag, std::uint64_t p) {
  if (tag == SetTag::Square2) return p % 4 == 3;
  return p == 2 || p % 6 == 5;
}

bool exponent_criterion(SetTag tag, std::uint64_t n) {
  for (const auto& [p, e] : factorize(n).factors) {
    if (forbidden_prime(tag, p) && e % 2 == 1) return false;
  }
  return true;
}

bool triangle_star_member(std::uint64_t n) {
  for (std::uint64_t d = 0; 3 * d * d <= n; ++d) {
    if (is_square(n - 3 * d * d)) return true;
  }
  return false;
}

void mark_triangle_star(std::uint64_t lo, std::uint64_t hi, std::vector<bool>& out) {
  for (std::uint64_t d = 0; 3 * d * d <= hi; ++d) {
    const std::uint64_t base = 3 * d * d;
    std::uint64_t c = base >= lo ? 0 : isqrt(lo - base);
    if (base + c * c < lo) ++c;
    for (; base + c * c <= hi; ++c) out[base + c * c - lo] = true;
  }
}

}  // namespace

SetId SetId::diamond(std::int64_t d) {
  if (!is_fundamental_discriminant(d)) {
    throw std::invalid_argument("diamond set needs a fundamental discriminant, got " + std::to_string(d));
  }
  return {SetTag::Diamond, d};
}

SetId SetId::parse(std::string_view text) {
  if (text == "square2") return square2();
  if (text == "triangle") return triangle();
  if (text == "triangle_star") return triangle_star();
  if (text.starts_with("diamond:")) {
    const std::string tail(text.substr(8));
    std::size_t used = 0;
    long long d = 0;
    try {
      d = std::stoll(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tail.size() && used > 0) return diamond(d);
  }
  throw std::invalid_argument("unknown set '" + std::string(text) + "'");
}

std::string SetId::name() const {
  switch (tag) {
    case SetTag::Square2: return "square2";
    case SetTag::Triangle: return "triangle";
    case SetTag::TriangleStar: return "triangle_star";
    case SetTag::Diamond: return "diamond:" + std::to_string(discriminant);
  }
  return "?";
}

std::uint64_t r2(std::uint64_t n, ReprMode mode) {
  if (n == 0) throw std::invalid_argument("r2: n must be positive");
  if (mode == ReprMode::Formula) {
    return static_cast<std::uint64_t>(4 * divisor_sum(DirichletCharacter::chi4(), n));
  }
  std::uint64_t count = 0;
  const std::uint64_t r = isqrt(n);
  for (std::uint64_t x = 0; x <= r; ++x) {
    const std::uint64_t rest = n - x * x;
    if (!is_square(rest)) continue;
    const std::uint64_t y = isqrt(rest);
    // signs of x and y
    count += (x == 0 ? 1 : 2) * (y == 0 ? 1 : 2);
  }
  return count;
}

std::uint64_t R2(std::uint64_t n, ReprMode mode) {
  if (n == 0) throw std::invalid_argument("R2: n must be positive");
  if (mode == ReprMode::Formula) {
    return static_cast<std::uint64_t>(6 * divisor_sum(DirichletCharacter::chi3(), n));
  }
  // x^2 + xy + y^2 = n  <=>  (2y + x)^2 = 4n - 3x^2; the form is >= (x^2+y^2)/2 so |x| <= sqrt(2n).
  std::uint64_t count = 0;
  const auto bound = static_cast<std::int64_t>(isqrt(2 * n));
  for (std::int64_t x = -bound; x <= bound; ++x) {
    const std::int64_t disc = 4 * static_cast<std::int64_t>(n) - 3 * x * x;
    if (disc < 0 || !is_square(static_cast<std::uint64_t>(disc))) continue;
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(disc)));
    const int roots = s == 0 ? 1 : 2;
    for (int i = 0; i < roots; ++i) {
      const std::int64_t twice_y = i == 0 ? -x + s : -x - s;
      if (twice_y % 2 != 0) continue;
      const std::int64_t y = twice_y / 2;
      if (x * x + x * y + y * y == static_cast<std::int64_t>(n)) ++count;
    }
  }
  return count;
}

std::uint64_t ideal_count(std::uint64_t n, std::int64_t discriminant) {
  const auto chi = DirichletCharacter::kronecker(discriminant);
  return static_cast<std::uint64_t>(divisor_sum(chi, n));
}

bool is_member(const SetId& set, std::uint64_t n) {
  switch (set.tag) {
    case SetTag::Square2:
    case SetTag::Triangle:
      return n == 0 || exponent_criterion(set.tag, n);
    case SetTag::TriangleStar:
      return triangle_star_member(n);
    case SetTag::Diamond:
      return n > 0 && ideal_count(n, set.discriminant) > 0;
  }
  return false;
}

std::vector<bool> sieve_members(const SetId& set, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("sieve_members: need lo <= hi");
  if (hi - lo >= kMaxWindow) throw BudgetError("sieve_members: window exceeds 10^9");
  const std::uint64_t len = hi - lo + 1;
  std::vector<bool> out(len, false);

  if (set.tag == SetTag::TriangleStar) {
    mark_triangle_star(lo, hi, out);
    return out;
  }

  std::uint64_t start = lo;
  if (lo == 0) {
    out[0] = set.tag != SetTag::Diamond;
    if (hi == 0) return out;
    start = 1;
  }
  const auto primes = primes_up_to(isqrt(hi));
  const std::size_t chunks = (hi - start + 1 + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint8_t>> parts(chunks);

  if (set.tag == SetTag::Diamond) {
    const auto chi = DirichletCharacter::kronecker(set.discriminant);
    parallel_for(chunks, [&](std::size_t c) {
      const std::uint64_t a = start + c * kChunk;
      const std::uint64_t b = std::min(hi, a + kChunk - 1);
      const auto f = divisor_sum_window(chi, a, b);
      parts[c].resize(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) parts[c][i] = f[i] > 0;
    });
  } else {
    const SetTag tag = set.tag;
    auto local = [tag](std::uint64_t p, unsigned e) -> std::uint8_t {
      return (forbidden_prime(tag, p) && e % 2 == 1) ? 0 : 1;
    };
    parallel_for(chunks, [&](std::size_t c) {
      const std::uint64_t a = start + c * kChunk;
      const std::uint64_t b = std::min(hi, a + kChunk - 1);
      parts[c] = sieve_multiplicative<std::uint8_t>(a, b, local, primes);
    });
  }
  std::uint64_t at = start - lo;
  for (const auto& part : parts) {
    for (std::uint8_t bit : part) out[at++] = bit != 0;
  }
  return out;
}

}  // namespace qfg
