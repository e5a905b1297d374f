#pragma once

#include <cstdint>
#include <string>

#include "lrkit/error.hpp"

namespace lrkit {

using Int = std::int64_t;
/// Wide intermediate for products of two Int values.
__extension__ using Int128 = __int128;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline Int narrow(Int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

}  // namespace checked
}  // namespace lrkit
