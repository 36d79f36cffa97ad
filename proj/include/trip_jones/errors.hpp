#pragma once

#include <stdexcept>
#include <string>

namespace trip_jones {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text (tokens, matrix rows, JSON term lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A 64-bit coefficient would overflow.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a supported size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace trip_jones
