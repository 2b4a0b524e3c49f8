#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rbx {

/// Base of every error raised by the library. The CLI maps BudgetExceeded to
/// exit code 3 and every other subclass to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class NotPresent : public Error {
 public:
  using Error::Error;
};

class WrongUniformity : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class DegenerateConstruction : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// An exact search ran out of its node allowance. Never replaced by an
/// approximate answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget)
      : Error(what + " (budget " + std::to_string(budget) + " nodes)"), budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Malformed document. `location` is "line L, column C" for syntax errors
/// and a JSON pointer such as "/edges/3" for semantic ones.
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : Error("parse error at " + location + ": " + message), location_(location) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace rbx
