#pragma once

#include <stdexcept>
#include <string>

namespace grover {

// Precondition violated by a caller-supplied value (index out of range,
// dimension mismatch, unnormalized input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds what the dense code paths are willing to allocate.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal mathematical invariant failed numerically.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grover
