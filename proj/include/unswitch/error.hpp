#pragma once

#include <stdexcept>
#include <string>

namespace unswitch {

// Base for every error raised by the library. Callers that only need to
// distinguish "bad input" from "negative answer" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input: endpoint out of range, self-loop, duplicate or
// out-of-range quadruple vertices.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// A function was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonGraphical : public Error {
 public:
  using Error::Error;
};

class InvalidSwitch : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotSplit : public Error {
 public:
  using Error::Error;
};

class SaturationFailure : public Error {
 public:
  using Error::Error;
};

// Raised when an internal certificate fails verification. Indicates a bug,
// never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NotUnswitchable : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Oracle routines refuse inputs beyond their brute-force budget.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  // 1-based line number, or 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace unswitch
