#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmcert {

// Base of every error raised by the library. Verdicts (accept/reject) are
// never reported through exceptions; these are contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroInversion : public Error {
 public:
  ZeroInversion() : Error("inverse of zero in prime field") {}
};

class ZeroAlpha : public Error {
 public:
  ZeroAlpha() : Error("evaluation point must be nonzero") {}
};

class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class NegativeDelta : public Error {
 public:
  using Error::Error;
};

class NoValidLocation : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed document text. Line numbers are 1-based; column 0 means the
// whole line.
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

class NonCanonicalResidue : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace pmcert
