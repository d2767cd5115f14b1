#pragma once

#include <stdexcept>
#include <string>

namespace datagrowth {

// Base for everything this library throws on bad inputs or failed runs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (CSV/JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input violating a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Estimation could not be set up (degenerate data, bad guess).
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace datagrowth
