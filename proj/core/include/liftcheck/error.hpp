#pragma once

#include <stdexcept>
#include <string>

namespace liftcheck {

// Raised when an input violates a documented precondition or type invariant.
// The message names the invariant.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text/JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liftcheck
