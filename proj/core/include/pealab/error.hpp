#pragma once

#include <stdexcept>
#include <string>

namespace pealab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table or presentation is malformed (ids out of range, wrong shape).
/// Distinct from an axiom violation, which is reported, not thrown.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree on a valid structure disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// b ⊖ a requested with a not below b.
class UndefinedDifference : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for this input.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A converted table failed the validation it is required to pass.
class ConstructionMismatch : public Error {
 public:
  using Error::Error;
};

/// A finite window is too small to decide the question asked of it.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

/// A state (or candidate state) violates a defining equation or bound.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A unit candidate fails to dominate some element within the cap.
class NotStrongUnit : public Error {
 public:
  using Error::Error;
};

/// A cone membership question the bounded search could not settle.
class Undecided : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pealab
