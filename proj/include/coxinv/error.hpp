#pragma once

#include <stdexcept>
#include <string>

namespace coxinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated a documented precondition (bad type string, node out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration cap or orbit memory budget was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure: a computed object contradicts a proven invariant.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coxinv
