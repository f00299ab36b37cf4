#pragma once

#include <stdexcept>
#include <string>

namespace isogr {

/// Mismatched gradings or domains, malformed input shapes, missing images.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the mathematical domain of an operation (k > n, zero torus entry, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A polynomial reaches past the degree cap of a truncated quotient.
class CapExceededError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A Laurent character is not invariant under the hyperoctahedral group.
class InvarianceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace isogr
