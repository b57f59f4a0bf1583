#pragma once

#include <stdexcept>
#include <string>

namespace modspace {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Matrix/tensor dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (rank deficiency, duplicate points, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. `where` names the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A self-check of an algorithm failed; indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace modspace
