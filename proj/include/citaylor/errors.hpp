#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citaylor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (bad flags, bad ring, nonhomogeneous sequence, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A term of a sequence element is divisible by no generator of the ideal.
class NotInIdeal : public InputError {
 public:
  using InputError::InputError;
};

/// A rational coefficient cannot be mapped into the selected prime field.
class CharacteristicError : public InputError {
 public:
  using InputError::InputError;
};

/// A computation exceeded its configured desk-scale budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace citaylor
