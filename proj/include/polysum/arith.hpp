#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace polysum {

using Int = std::int64_t;

// Overflow-checked integer arithmetic. Every helper throws std::overflow_error
// instead of wrapping.
namespace arith {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int square(Int a) { return mul(a, a); }

// Floor of the square root, exact for the whole nonnegative range.
inline Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  auto r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  // Division keeps the comparisons overflow-free.
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

// True when n is a perfect square; the root is written to *root.
inline bool is_square(Int n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// Representative of a modulo q in [0, q).
inline Int mod(Int a, Int q) {
  Int r = a % q;
  return r < 0 ? r + q : r;
}

inline Int lcm(Int a, Int b) {
  return mul(a / std::gcd(a, b), b);
}

}  // namespace arith
}  // namespace polysum
