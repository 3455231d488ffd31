#pragma once

#include <stdexcept>

namespace lcmprime {

// An argument lies outside the domain of the operation (j < 2 for the
// characteristic function, n = 0 for the formulas, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An LcmState whose value is not lcm(1..j), detected by an inexact ratio.
class CorruptStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed. Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcmprime
