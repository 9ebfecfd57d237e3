#pragma once

// Overflow-checked 64-bit integer arithmetic. Every operation either returns
// the exact result or throws Error(kOverflow); nothing wraps silently.

#include <cstdint>
#include <string>

#include "twobridge/error.hpp"

namespace twobridge {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::kOverflow,
         "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(ErrorCode::kOverflow,
         "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::kOverflow,
         "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// Non-negative gcd; gcd(0, 0) == 0.
inline Int gcd(Int a, Int b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor division and the matching non-negative remainder for m > 0.
inline Int floor_div(Int a, Int m) {
  Int q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

inline Int mod_positive(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m (m > 1) in [0, m), via extended Euclid.
/// Throws kNotCoprime when gcd(a, m) != 1.
inline Int mod_inverse(Int a, Int m) {
  Int old_r = mod_positive(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int quot = old_r / r;
    Int t = old_r - quot * r;
    old_r = r;
    r = t;
    t = checked_sub(old_s, checked_mul(quot, s));
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    fail(ErrorCode::kNotCoprime, std::to_string(a) + " has no inverse modulo " +
                                     std::to_string(m));
  return mod_positive(old_s, m);
}

}  // namespace twobridge
