#pragma once

#include <stdexcept>
#include <string>

namespace showdown {

// Base of every error raised by the library. Callers that only care about
// "the computation failed" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root bracket without a sign change, or a malformed interval.
class BracketError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain where a formula is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive refinement could not reach the requested tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Composite numerical failure (e.g. an inner solve that stopped bracketing).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied object broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace showdown
