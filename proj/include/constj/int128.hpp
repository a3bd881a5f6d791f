#pragma once

// Exact 128-bit integer helpers. Every arithmetic path that can grow with
// q = p^i goes through the checked operations below; overflow throws.

#include <cstdint>
#include <string>
#include <string_view>

#include "constj/errors.hpp"

namespace constj {

__extension__ typedef __int128 Int;
__extension__ typedef unsigned __int128 UInt;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

inline Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::string to_string(Int v);
std::string to_string(UInt v);

/// Parses a decimal integer (optional leading '-'). Throws ValidationError.
Int parse_int(std::string_view text);

}  // namespace constj
