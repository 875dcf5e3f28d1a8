#pragma once

#include <stdexcept>
#include <string>

namespace tpcells {

/// Raised when an operation's precondition is violated by its input
/// (mismatched Cartan data, malformed words, degenerate flags, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematical check that should hold turns out false
/// (e.g. an identified cell falls outside Q^J).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tpcells
