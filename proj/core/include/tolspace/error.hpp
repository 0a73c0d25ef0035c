#pragma once

#include <stdexcept>
#include <string>

namespace tolspace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex label that does not belong to the space it was used with.
class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by apply_move when the subject of a move fails its simplicity check.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

/// Bounded-integer arithmetic would have wrapped.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input. `where` names the offending location.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A search ran past its node budget. Callers that return three-valued
/// answers catch this and report "unknown".
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace tolspace
