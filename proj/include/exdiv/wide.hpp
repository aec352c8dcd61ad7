// Checked 128-bit integer arithmetic and the library's error types.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exdiv {

/// Nonnegative integer in [0, 2^128 - 1]. Every arithmetic helper below is
/// checked; overflow throws OverflowError instead of wrapping.
using WideNat = unsigned __int128;
/// Signed companion in [-2^127, 2^127 - 1], used for function values.
using SignedWide = __int128;

inline constexpr WideNat kWideMax = ~WideNat{0};
inline constexpr SignedWide kSignedMax = static_cast<SignedWide>(kWideMax >> 1);

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// A requested size exceeds a documented guard (memory or enumeration budget).
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

/// Precondition violated by an argument (n = 0, pole of zeta, unknown name...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

inline WideNat checked_add(WideNat a, WideNat b) {
  WideNat r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

inline WideNat checked_mul(WideNat a, WideNat b) {
  WideNat r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

inline SignedWide checked_add(SignedWide a, SignedWide b) {
  SignedWide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("signed 128-bit addition overflow");
  return r;
}

inline SignedWide checked_sub(SignedWide a, SignedWide b) {
  SignedWide r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("signed 128-bit subtraction overflow");
  return r;
}

inline SignedWide checked_mul(SignedWide a, SignedWide b) {
  SignedWide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("signed 128-bit multiplication overflow");
  return r;
}

WideNat checked_pow(WideNat base, std::uint64_t exponent);

/// Converts to the signed range, throwing if the value exceeds 2^127 - 1.
SignedWide to_signed(WideNat v);

WideNat gcd(WideNat a, WideNat b);
WideNat isqrt(WideNat n);
/// Largest r with r^k <= n.
WideNat iroot(WideNat n, unsigned k);

std::string to_string(WideNat v);
std::string to_string(SignedWide v);

/// Parses a decimal integer. Scientific shorthand is accepted when the value
/// is an exact integer: "1e8", "2.5e3", "146361946186458562560000".
/// Throws DomainError on malformed text and OverflowError above 2^128 - 1.
WideNat parse_wide(std::string_view text);

}  // namespace exdiv
