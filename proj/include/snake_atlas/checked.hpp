#pragma once

#include <stdexcept>
#include <type_traits>

namespace snake_atlas {

// Exact integer arithmetic. Built-in integers trap on overflow; any other
// scalar (e.g. boost::multiprecision::cpp_int) is trusted to be unbounded.

template <class Int>
Int checked_add(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
  } else {
    return a + b;
  }
}

template <class Int>
Int checked_sub(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
  } else {
    return a - b;
  }
}

template <class Int>
Int checked_mul(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
  } else {
    return a * b;
  }
}

}  // namespace snake_atlas
