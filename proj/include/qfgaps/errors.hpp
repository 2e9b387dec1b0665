#pragma once

#include <stdexcept>

namespace qfg {

// Bad arguments surface as std::invalid_argument / std::domain_error.

/// A request exceeds a configured sieve window or memory budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (non-integral eta, witness not in the set, ...).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qfg
