#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratsos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric argument outside the domain of an operation (zero divisor, n <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// API misuse: mismatched generator contexts, bad indices, shape mismatches.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of the construction does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSquarefreeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An identity that must hold by construction failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace ratsos
