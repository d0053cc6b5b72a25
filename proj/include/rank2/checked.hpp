#ifndef RANK2_CHECKED_HPP
#define RANK2_CHECKED_HPP

#include <string>

#include "rank2/errors.hpp"
#include "rank2/types.hpp"

namespace rank2::checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw InvariantViolation("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("integer overflow in multiplication");
  return r;
}

/// a / b, throwing unless b divides a.
inline Int exact_div(Int a, Int b, const char* what) {
  if (b == 0 || a % b != 0) {
    throw InvariantViolation(std::string("inexact division in ") + what + ": " + std::to_string(a) +
                             " / " + std::to_string(b));
  }
  return a / b;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace rank2::checked

#endif  // RANK2_CHECKED_HPP
