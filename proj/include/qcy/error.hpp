#pragma once

#include <stdexcept>
#include <string>

namespace qcy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two scalars or cyclotomic integers live in incompatible orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A weight does not divide the degree d = sum of weights.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// The input is valid but lies outside what the operation handles.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments (wrong sizes, non-positive orders, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A result contradicting the underlying theory, e.g. a non-square image size
/// where a PI degree is expected. Always a defect, never a user error.
class InternalDefect : public Error {
 public:
  using Error::Error;
};

}  // namespace qcy
