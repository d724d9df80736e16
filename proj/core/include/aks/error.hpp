#pragma once

#include <stdexcept>
#include <string>

namespace aks {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero polynomial, or an undefined gcd(0, 0).
class ZeroDivisorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two polynomials over different coefficient rings were combined.
class ModulusMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A rank, index or degree frame fell outside the admissible range.
class OutOfRangeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A property that the underlying mathematics guarantees did not hold.
/// Seeing one of these means either a bug or a false theorem.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace aks
