#pragma once

#include <cstdint>
#include <limits>

#include "apery/error.hpp"

namespace apery {

using Value = std::int64_t;

inline constexpr Value kMaxValue = std::numeric_limits<Value>::max();

// Checked 63-bit arithmetic. Anything leaving [0, 2^63) is an Overflow error,
// never a wraparound.
inline Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer overflow in addition");
  return out;
}

inline Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer overflow in multiplication");
  return out;
}

inline Value checked_sub(Value a, Value b) {
  Value out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer overflow in subtraction");
  return out;
}

}  // namespace apery
