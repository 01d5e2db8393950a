#pragma once

#include <stdexcept>
#include <string>

namespace gds {

// Base for everything the library throws. Messages are meant to be shown to
// the user verbatim (the CLI prints them as-is).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar argument lies outside the admissible interval.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An input violates a structural precondition (not orthogonal, wrong
// spectrum, not generalized doubly stochastic, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation produced NaN or Inf.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace gds
