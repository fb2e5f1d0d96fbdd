#pragma once

#include <stdexcept>
#include <string>

namespace monocurve {

/// Malformed or mathematically invalid input (bad generators, mismatched
/// rings, unparsable polynomial text).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size bound.
class GuardViolation : public std::runtime_error {
 public:
  explicit GuardViolation(const std::string& what)
      : std::runtime_error("computation exceeds configured bounds: " + what) {}
};

/// A broken internal invariant, e.g. a reduction transcript that fails to
/// reconstruct its S-polynomial.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monocurve
