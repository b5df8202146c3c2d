#pragma once

#include <stdexcept>

namespace polyzeta {

// Caller broke a precondition: malformed text, mixed alphabets, divergent input, ...
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Seeing one of these means a bug, not bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polyzeta
