#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxlin {

/// Base class for every error raised by the library on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

/// Raised by the above-average decision procedures, which are only defined
/// for integral weights.
class NonIntegralWeight : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

enum class Precondition {
  missing_zero_vector,
  not_spanning,
  full_space,
  too_few_vectors,
  size_threshold,
  parameter_too_small,
  not_irreducible,
  too_few_equations,
  arity_exceeded,
  oracle_cap_exceeded,
};

const char* to_string(Precondition p);

class PreconditionError : public Error {
 public:
  PreconditionError(Precondition which, const std::string& detail)
      : Error(std::string(to_string(which)) + ": " + detail), which_(which) {}

  Precondition which() const noexcept { return which_; }

 private:
  Precondition which_;
};

/// A text input violated its declared format.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& rule)
      : Error("line " + std::to_string(line) + ": " + rule), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A guarantee that should hold by construction did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxlin
