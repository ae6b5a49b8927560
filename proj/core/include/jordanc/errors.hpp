#pragma once

#include <stdexcept>
#include <string>

namespace jordanc {

/// Operands live in incompatible algebras (block shapes or map shapes differ).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a documented precondition (non-hermitian, n out of range...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element does not belong to the Jordan algebra it was paired with.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request for a Jordan algebra that has no special (matrix) realization.
class NotSpecialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure left its consistency envelope.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jordanc
