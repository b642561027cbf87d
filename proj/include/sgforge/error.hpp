#pragma once

#include <stdexcept>
#include <string>

namespace sgforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input or an argument outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The generators have a common divisor > 1, so the monoid is not cofinite.
class GcdNotOne : public Error {
 public:
  using Error::Error;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

/// unitary_extension called on the full semigroup of naturals.
class AlreadyFull : public Error {
 public:
  using Error::Error;
};

/// colength requested for a relative ideal that is not inside the semigroup.
class NotContained : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A membership or equality that a proved statement guarantees did not hold.
/// Only an implementation bug can raise this.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Two independent computation routes for the same predicate disagreed.
class InternalDisagreement : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

}  // namespace sgforge
