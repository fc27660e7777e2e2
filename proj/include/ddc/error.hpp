#pragma once

#include <stdexcept>
#include <string>

namespace ddc {

// Base for data-level failures. Argument misuse is reported with
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when the input admits no meaningful answer: too few points,
// all points coincident, and similar.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddc
