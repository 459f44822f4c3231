#pragma once

#include <stdexcept>
#include <string>

namespace kul {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input from a caller: unsupported variety, malformed Gram matrix,
/// parse errors, zero vectors, classes the closed-form lifts do not reach.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (non-integral Euler pairing, a class outside
/// the span of a Knum basis). Always a bug in a table or a pipeline step.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace kul
