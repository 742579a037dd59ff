#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flca {

// Malformed user input: bad syntax, non-prime subscripts, wrong arity.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input applied to operands of the wrong kind.
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an engine-internal identity fails; always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flca
