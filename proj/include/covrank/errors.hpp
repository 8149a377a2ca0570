#pragma once

#include <stdexcept>
#include <string>

namespace covrank {

// Base for all library errors. Subclasses map to CLI exit codes:
// UsageError -> 1, DataError -> 2, GuardError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or parameter combinations.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// A parse failure tied to a specific input line.
class ParseError : public DataError {
 public:
  ParseError(const std::string& message, long long line)
      : DataError("line " + std::to_string(line) + ": " + message), line_(line) {}
  long long line() const { return line_; }

 private:
  long long line_;
};

// A resource guard refused to run (size limits, combinatorial limits).
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace covrank
