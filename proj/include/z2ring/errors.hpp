#pragma once

#include <stdexcept>
#include <string>

namespace z2ring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of different lengths or matrix shapes that do not fit.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument value was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was refused because it would exceed its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A ring element has a low-degree coefficient outside the filtration.
class NotInRing : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace z2ring
