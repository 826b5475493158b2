#pragma once

#include <stdexcept>
#include <string>

namespace sqfiber {

// Bad input: malformed files, unknown generators, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter refers to a generator outside the alphabet it is evaluated against.
class AlphabetMismatch : public InputError {
 public:
  using InputError::InputError;
};

// The requested computation is outside what the tool supports
// (e.g. non-unit weights for monodromy, k < 4 for the LOT family).
class Unsupported : public InputError {
 public:
  using InputError::InputError;
};

// An operation's precondition does not hold for this input (inadmissible
// weights, links that are not trees, disconnected fiber, ...).
class PreconditionFailed : public InputError {
 public:
  using InputError::InputError;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqfiber
