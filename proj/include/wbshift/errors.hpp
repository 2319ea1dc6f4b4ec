#pragma once

#include <stdexcept>
#include <string>

namespace wbshift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (s <= 0, q < 1, horizon too small, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A vector or operator lives on a different l^p than the operation expects.
class ExponentMismatch : public Error {
 public:
  ExponentMismatch(double expected, double actual);
  double expected() const noexcept { return expected_; }
  double actual() const noexcept { return actual_; }

 private:
  double expected_;
  double actual_;
};

/// Explicit weight lists are finite; asking past their end is an error.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A computation left the range of double (e.g. tail sums raised to a large s).
class NumericRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace wbshift
