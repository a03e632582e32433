#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simtri {

// Base of every error raised by the library. Input problems (bad files,
// mismatched sizes) and precondition violations both derive from it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

// The transitive closure of a relation set is not irreflexive.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A relation matrix handed to the checked constructor is not a strict order.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

class NotComparabilityOrdering : public Error {
 public:
  using Error::Error;
};

class NotApexOrdering : public Error {
 public:
  using Error::Error;
};

class NotSimpleTriangle : public Error {
 public:
  using Error::Error;
};

class EdgeSetMismatch : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidRepresentation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  // line 0 means the input is not line-oriented.
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SelfLoop : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateEdge : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace simtri
