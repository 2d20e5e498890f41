#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>

#include "qcy/error.hpp"

namespace qcy {

using Int = std::int64_t;
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Non-negative residue of a modulo m (m > 0).
constexpr Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalDefect("integer overflow in multiplication");
  return out;
}

inline Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InternalDefect("integer overflow in addition");
  return out;
}

inline Int lcm_checked(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b < 0 ? -b : b);
}

inline Int lcm_of(std::span<const Int> values) {
  Int acc = 1;
  for (Int v : values) acc = lcm_checked(acc, v);
  return acc;
}

struct ExtendedGcd {
  Int g;
  Int x;
  Int y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y = g.
inline ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m when gcd(a, m) = 1.
inline std::optional<Int> inverse_mod(Int a, Int m) {
  auto [g, x, y] = extended_gcd(mod_floor(a, m), m);
  (void)y;
  if (g != 1) return std::nullopt;
  return mod_floor(x, m);
}

inline Int power_mod(Int base, Int exponent, Int modulus) {
  UInt128 result = 1 % modulus;
  UInt128 b = static_cast<UInt128>(mod_floor(base, modulus));
  while (exponent > 0) {
    if (exponent & 1) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<Int>(result);
}

inline Int ipow(Int base, unsigned exponent) {
  Int r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace qcy
