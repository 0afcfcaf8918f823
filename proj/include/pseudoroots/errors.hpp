#pragma once

#include <stdexcept>
#include <string>

namespace pseudoroots {

// Base class for every error raised by the library. The CLI maps
// subclasses onto exit codes through exit_code().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

// Malformed input: bad JSON, unknown ids, out-of-range bounds.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidGraph : public InputError {
 public:
  using InputError::InputError;
};

class NotAComplex : public InputError {
 public:
  using InputError::InputError;
};

// Exact arithmetic hit a non-invertible element.
class NumericError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class SingularMatrix : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularVandermonde : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularQuasidet : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularDifference : public NumericError {
 public:
  using NumericError::NumericError;
};

// A computed property turned out false.
class PropertyFailure : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

class NotSufficient : public PropertyFailure {
 public:
  using PropertyFailure::PropertyFailure;
};

// Two derivations gave different values to the same edge: the labeling is
// not a representation of the graph algebra.
class InconsistentLabels : public PropertyFailure {
 public:
  using PropertyFailure::PropertyFailure;
};

// A guaranteed-to-exist object was not found. Indicates a bug.
class LemmaViolated : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

}  // namespace pseudoroots
