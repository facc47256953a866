#pragma once

#include <stdexcept>
#include <string>

namespace gfw {

// Domain errors are caused by the input (bad parameters, a field that is too
// small for the requested point, ...). Internal errors mean an invariant that
// the mathematics guarantees did not hold; they indicate a bug.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

// The declared modulus turned out to be reducible: an element shares a
// non-constant factor with it.
class ReducibleModulus : public DomainError {
 public:
  explicit ReducibleModulus(const std::string& factor)
      : DomainError("reducible modulus exposed (common factor " + factor + ")") {}
};

class FieldMismatch : public DomainError {
 public:
  FieldMismatch() : DomainError("operands live in different number fields") {}
};

class FieldTooSmall : public DomainError {
 public:
  explicit FieldTooSmall(const std::string& what)
      : DomainError("field too small; supply extension (" + what + ")") {}
};

// Raised by the pivot elimination when some form vanishes to the stored
// precision; callers escalate the truncation.
class TruncationExhausted : public DomainError {
 public:
  TruncationExhausted() : DomainError("increase truncation") {}
};

}  // namespace gfw
