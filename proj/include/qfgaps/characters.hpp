#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfg {

/// Real Dirichlet character stored as a dense residue table of values in {-1, 0, 1}.
/// Immutable after construction.
class DirichletCharacter {
 public:
  /// Non-trivial character mod 3.
  static DirichletCharacter chi3();
  /// Primitive character mod 4.
  static DirichletCharacter chi4();
  /// Non-trivial real character mod 6 (induced from chi3, so not primitive).
  static DirichletCharacter chi6();
  static DirichletCharacter trivial(std::uint64_t modulus);
  /// Kronecker symbol (D/.) for a fundamental discriminant D, as a character mod |D|.
  static DirichletCharacter kronecker(std::int64_t discriminant);
  /// values[r] is the value on residue r, r = 0..modulus-1. Rejects tables
  /// that vanish on the wrong residues or are not completely multiplicative.
  static DirichletCharacter from_table(std::uint64_t modulus, std::vector<int> values, std::string id = {});

  /// Parses "chi3", "chi4", "chi6", "trivial:K", "kronecker:D".
  static DirichletCharacter parse(std::string_view text);

  int operator()(std::int64_t n) const {
    const auto k = static_cast<std::int64_t>(values_.size());
    std::int64_t r = n % k;
    if (r < 0) r += k;
    return values_[static_cast<std::size_t>(r)];
  }

  std::uint64_t modulus() const { return values_.size(); }
  bool is_trivial() const { return trivial_; }
  bool is_primitive() const { return primitive_; }
  bool is_real() const { return true; }
  const std::string& id() const { return id_; }
  std::span<const std::int8_t> values() const { return values_; }

  /// Pointwise product as a character mod lcm of the moduli (zeros retained).
  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);

 private:
  DirichletCharacter(std::vector<std::int8_t> values, std::string id);

  std::vector<std::int8_t> values_;
  std::string id_;
  bool trivial_ = false;
  bool primitive_ = false;
};

bool is_fundamental_discriminant(std::int64_t d);

/// Kronecker symbol (d/n) for n >= 0.
int kronecker_symbol(std::int64_t d, std::int64_t n);

/// F_psi(n) = sum over d | n of psi(d), by explicit divisor enumeration.
std::int64_t divisor_sum(const DirichletCharacter& psi, std::uint64_t n);

/// F_psi(n) from divisors d < sqrt(n) only; requires psi(n) = 1.
std::int64_t divisor_sum_sqrt(const DirichletCharacter& psi, std::uint64_t n);

/// Largest x accepted by divisor_sum_table (memory guard); defaults to 2^28.
std::uint64_t divisor_sum_table_limit();
void set_divisor_sum_table_limit(std::uint64_t limit);

/// Entry n (1-based; entry 0 is unused and zero) equals F_psi(n), n = 1..x.
/// Built by a divisor sieve: O(x log x) additions.
std::vector<std::int32_t> divisor_sum_table(const DirichletCharacter& psi, std::uint64_t x);

/// F_psi(n) for n in [lo, hi], lo >= 1, via a chunked segmented factor sieve.
std::vector<std::int32_t> divisor_sum_window(const DirichletCharacter& psi, std::uint64_t lo, std::uint64_t hi);

}  // namespace qfg
