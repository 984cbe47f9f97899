#pragma once

#include <stdexcept>
#include <string>

namespace gonseq {

/// Input violates a documented parameter domain or structural invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside what an operation supports.
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller broke an operation precondition (e.g. Dhar burn on a divisor in debt).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured search or degree ceiling was hit before an answer was found.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Text-format parse failure. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace gonseq
