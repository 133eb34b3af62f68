#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; `offset` is the byte position of the first bad token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t offset)
      : Error(std::move(message) + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A numeric bound was exceeded (shift exponents, generator indices, coefficients).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked to work at fewer strands than the word occupies.
class WidthError : public Error {
 public:
  using Error::Error;
};

/// A Markov move does not apply to the given word.
class MoveNotApplicable : public Error {
 public:
  using Error::Error;
};

/// The state sum would exceed the configured crossing limit.
class TooManyCrossings : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidlogic
