#pragma once

#include <stdexcept>
#include <string>

namespace rahecke {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed words, literals, configs, or parameters out of range.
class InputError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured element cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not defined for the parameter mode in use.
class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition (e.g. not cyclically reduced).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class TheoremCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rahecke
