#pragma once

#include <stdexcept>
#include <string>

namespace gdnp {

/// Base for errors raised by an algebraic operation on well-formed input
/// (a word outside C[X], a polynomial with the wrong weight, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidWord : public MathError {
 public:
  using MathError::MathError;
};

class ZeroPolynomial : public MathError {
 public:
  using MathError::MathError;
};

class BadWeight : public MathError {
 public:
  using MathError::MathError;
};

class NotWeightZero : public MathError {
 public:
  using MathError::MathError;
};

class NoCirc : public MathError {
 public:
  using MathError::MathError;
};

class BadPosition : public MathError {
 public:
  using MathError::MathError;
};

class EmptyMonomial : public MathError {
 public:
  using MathError::MathError;
};

class BadShape : public MathError {
 public:
  using MathError::MathError;
};

/// Malformed input text: expression syntax, unknown generator, bad flag value.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}

  /// 1-based character offset of the offending token; 0 when not tied to a position.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gdnp
