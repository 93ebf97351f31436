#pragma once

#include <stdexcept>
#include <string>

namespace hf {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of size / involution / structure tensor disagree.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (p < 1, t outside (0,1], ...).
// One or more hypergroup axioms fail beyond tolerance.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A required input property does not hold (missing Haar, not a subgroup, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NoHaarMeasureError : public Error {
 public:
  using Error::Error;
};

class DegenerateSplittingError : public Error {
 public:
  using Error::Error;
};

class NonOrthogonalCoefficientsError : public Error {
 public:
  using Error::Error;
};

class NoncommutativeError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

class CorrespondenceError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Unknown builtin name or malformed builder spec.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace hf
