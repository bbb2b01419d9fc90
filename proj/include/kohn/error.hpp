#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kohn {

/// Raised when a fixed-width fast path would overflow. Callers retry with
/// `Integer`; the error never escapes a public entry point.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when an exact computation produces a value that cannot be right
/// (a character average that is not an integer, a non-exact division).
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual literal; `position` is the 0-based offending offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kohn
