#pragma once

#include <stdexcept>
#include <string>

namespace freedecomp {

// Base of every error raised by the library. Checkers never throw on a
// failed property; they return a CheckReport. Exceptions are reserved for
// misuse (bad arguments, violated preconditions, corrupt input).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a construction would need a presheaf level above its budget.
class BudgetOverflow : public Error {
 public:
  BudgetOverflow(int needed_level, int budget)
      : Error("needs level A_" + std::to_string(needed_level) + " but the budget is " +
              std::to_string(budget)),
        needed_level_(needed_level) {}
  int needed_level() const noexcept { return needed_level_; }

 private:
  int needed_level_;
};

// Raised when a computation needs simplices above the truncation.
class TruncationTooSmall : public Error {
 public:
  TruncationTooSmall(const std::string& what, int required)
      : Error(what + " (requires truncation >= " + std::to_string(required) + ")"),
        required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

// The input claimed a structural property (unique lifts, closure under an
// operator) that it does not have.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace freedecomp
