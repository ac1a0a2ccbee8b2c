#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradedexp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad tables, non-subgroups, invalid cocycles, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A structural self-check failed. Always an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A configured size or work cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gradedexp
