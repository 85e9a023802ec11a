#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

// Argument outside the mathematical domain of an operation (bad rank, wrong
// parity, non-invertible field element, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration or brute-force oracle would exceed its hard budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exactness guarantee was broken (non-exact division, asymmetric result).
// Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heckelab
