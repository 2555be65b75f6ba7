#ifndef K3GON_ARITH_HPP
#define K3GON_ARITH_HPP

#include <cstdint>
#include <stdexcept>

namespace k3gon {

using i64 = std::int64_t;

// All arithmetic in the library goes through these helpers. Inputs stay far
// below 2^63 for the documented scan ranges; if a caller ever pushes past
// that, we fail loudly instead of wrapping.
inline i64 checked_add(i64 x, i64 y) {
  i64 out;
  if (__builtin_add_overflow(x, y, &out))
    throw std::overflow_error("k3gon: integer overflow in addition");
  return out;
}

inline i64 checked_sub(i64 x, i64 y) {
  i64 out;
  if (__builtin_sub_overflow(x, y, &out))
    throw std::overflow_error("k3gon: integer overflow in subtraction");
  return out;
}

inline i64 checked_mul(i64 x, i64 y) {
  i64 out;
  if (__builtin_mul_overflow(x, y, &out))
    throw std::overflow_error("k3gon: integer overflow in multiplication");
  return out;
}

// Floor/ceil division with positive divisor, exact on negatives.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  i64 r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) {
  i64 q = a / b;
  i64 r = a % b;
  return (r != 0 && r > 0) ? q + 1 : q;
}

}  // namespace k3gon

#endif
