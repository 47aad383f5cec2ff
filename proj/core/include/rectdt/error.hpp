#pragma once

#include <stdexcept>
#include <string>

namespace rectdt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents, CLI pairs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation's geometric precondition does not hold.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// The point set violates general position (shared coordinate, collinear
/// triple, or four points on one homothet boundary).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A construction invariant failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rectdt
