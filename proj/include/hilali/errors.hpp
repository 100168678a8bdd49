#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilali {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input: bad model files, failed preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression; `position` is a 0-based byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands built over different generator lists.
class UniverseMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A probe or search budget ran out before a certificate was found.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity contradicts a proven inequality or identity. Either
/// the input violates a precondition that was not caught, or the engine is
/// wrong.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hilali
