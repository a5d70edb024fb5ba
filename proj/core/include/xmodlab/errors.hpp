#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xmodlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class RelationViolated : public Error {
 public:
  using Error::Error;
};

class NonAbelian : public Error {
 public:
  using Error::Error;
};

/// A computation would leave the exhaustive-enumeration envelope.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class SearchBoundExceeded : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

class CosetLimitExceeded : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class NonInjective : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class EdgeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a constructed crossed module fails its own axioms. This is an
/// internal error: the induced relator scheme should make it impossible.
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace xmodlab
