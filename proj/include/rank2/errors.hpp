#ifndef RANK2_ERRORS_HPP
#define RANK2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rank2 {

/// Input outside the admissible domain (non-dominant weight, violated
/// theorem hypothesis, malformed system). Maps to CLI exit code 2.
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold did not (overflow, inexact division,
/// negative multiplicity, non-dominant key). Maps to CLI exit code 1.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rank2

#endif  // RANK2_ERRORS_HPP
