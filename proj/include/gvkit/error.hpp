#pragma once

#include <stdexcept>
#include <string>

namespace gvkit {

// Base of every error thrown by the library. The CLI maps these onto exit
// codes, so each subclass names a distinct failure category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands carry different variable tags.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested output needs coefficients outside the known window of an input.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (rationals, CSV, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A linear system that should be triangular with nonzero pivots is not.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace gvkit
