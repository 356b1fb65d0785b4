#pragma once

#include <stdexcept>
#include <string>

namespace simstab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (degenerate map, zero
/// polynomial where a nonzero one is required, bad template, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Plants and controllers live in different time domains.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// The closed-loop characteristic polynomial vanishes identically, so
/// 1 + p*c is not invertible.
class IllPosedLoop : public Error {
 public:
  using Error::Error;
};

/// An iterative construction ran out of budget before producing a
/// certified result.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A floating-point diagnostic could not separate its answer from rounding
/// noise.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace simstab
