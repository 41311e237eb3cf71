#pragma once

#include <stdexcept>
#include <string>

namespace tauh {

// Shape or membership mismatch: wrong rank, element of another group,
// unknown H label, mixed groups in a binary operation.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix that is not a well-defined bijective endomorphism of the group.
class InvalidAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// H table that fails closure, associativity, inverses or the homomorphism
// property of tau / delta.
class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A function handed to an operation on the wrong side (primal vs dual).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Argument outside the mathematical domain (n < 2, a <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense table would exceed the configured order cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tauh
