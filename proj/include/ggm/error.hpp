#pragma once

#include <stdexcept>
#include <string>

namespace ggm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters or arguments violate a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Specialization hit a zero of the denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ggm
