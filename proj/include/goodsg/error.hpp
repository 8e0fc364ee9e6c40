#pragma once

#include <stdexcept>
#include <string>

namespace goodsg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed: either a bug or an input that slipped
// past validation.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(line > 0 ? msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)
                       : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace goodsg
