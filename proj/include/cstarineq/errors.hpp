#pragma once

#include <stdexcept>
#include <string>

namespace cstarineq {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes are incompatible.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be Hermitian is not, beyond tolerance.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// An iteration failed to converge or an internal identity failed to verify.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A scalar function was evaluated outside its domain, or produced a
/// non-finite value where a finite one is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Fractional power requested for a matrix with an eigenvalue that is
/// negative beyond the clamping tolerance.
class NegativityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Construction-time invariant of a value type failed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument violates an operation precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed command line, file, or configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The built-in counterexample reproduction did not match the recorded
/// values.
class ReproductionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cstarineq
