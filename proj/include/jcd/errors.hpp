#pragma once

#include <stdexcept>
#include <string>

namespace jcd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch, index out of range and similar shape problems.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An input fails a documented predicate (triangularity, diagonalizability, ...).
class PreconditionError : public Error {
 public:
  PreconditionError(std::string predicate, const std::string& what)
      : Error(what), predicate_(std::move(predicate)) {}

  /// Name of the violated predicate, e.g. "is_diagonalizable(S)".
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

/// An internal guarantee failed. Always indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The computation needs eigenvalues outside the rationals.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, JSON instance files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace jcd
