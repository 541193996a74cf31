#pragma once

#include <stdexcept>
#include <string>

namespace coxm06 {

/// Base class of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable universes (Cox / torus / parameter).
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A variable with a negative exponent was mapped to something that is not a single term.
class NonInvertibleSubstitution : public Error {
 public:
  NonInvertibleSubstitution() : Error("non-invertible substitution") {}
  explicit NonInvertibleSubstitution(const std::string& what)
      : Error("non-invertible substitution: " + what) {}
};

class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& variable)
      : Error("pole at point: " + variable + " = 0 with negative exponent") {}
};

/// Malformed index data: repeated indices, wrong arity, values outside 1..6.
class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class NonTermCocycle : public Error {
 public:
  using Error::Error;
};

/// A parameter triple (A, B, C) whose lift leaves the open set Y.
class PointNotInY : public Error {
 public:
  explicit PointNotInY(std::string coordinate)
      : Error("point not in Y: " + coordinate + " = 0"), coordinate_(std::move(coordinate)) {}
  const std::string& coordinate() const noexcept { return coordinate_; }

 private:
  std::string coordinate_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxm06
