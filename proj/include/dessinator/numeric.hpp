#pragma once

#include <cstdint>

#include "dessinator/error.hpp"

namespace dessinator {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw error("integer overflow in multiplication");
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw error("negative exponent");
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

inline std::int64_t factorial(int n) {
  if (n < 0) throw error("factorial of negative value");
  std::int64_t out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

}  // namespace dessinator
