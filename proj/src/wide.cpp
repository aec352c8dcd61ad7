#include "exdiv/wide.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace exdiv {

WideNat checked_pow(WideNat base, std::uint64_t exponent) {
  WideNat result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = checked_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = checked_mul(base, base);
  }
  return result;
}

SignedWide to_signed(WideNat v) {
  if (v > static_cast<WideNat>(kSignedMax)) throw OverflowError("value exceeds signed 128-bit range");
  return static_cast<SignedWide>(v);
}

WideNat gcd(WideNat a, WideNat b) {
  while (b != 0) {
    WideNat t = a % b;
    a = b;
    b = t;
  }
  return a;
}

WideNat isqrt(WideNat n) { return iroot(n, 2); }

namespace {

// r^k <= n without overflow.
bool pow_le(WideNat r, unsigned k, WideNat n) {
  WideNat acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && acc > n / r) return false;
    acc *= r;
  }
  return acc <= n;
}

}  // namespace

WideNat iroot(WideNat n, unsigned k) {
  if (k == 0) throw DomainError("iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  // Floating estimate, then exact correction.
  long double approx = std::pow(static_cast<long double>(n), 1.0L / k);
  WideNat r = approx < 1 ? 0 : static_cast<WideNat>(approx);
  while (r > 0 && !pow_le(r, k, n)) --r;
  while (pow_le(r + 1, k, n)) ++r;
  return r;
}

std::string to_string(WideNat v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(SignedWide v) {
  if (v >= 0) return to_string(static_cast<WideNat>(v));
  // Two's complement magnitude is safe even for the minimum value.
  return "-" + to_string(static_cast<WideNat>(0) - static_cast<WideNat>(v));
}

WideNat parse_wide(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  std::string_view mantissa = text;
  std::uint64_t exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    if (exp_text.empty() || exp_text.size() > 3) throw DomainError("malformed exponent in '" + std::string(text) + "'");
    for (char c : exp_text) {
      if (c < '0' || c > '9') throw DomainError("malformed exponent in '" + std::string(text) + "'");
      exponent = exponent * 10 + static_cast<std::uint64_t>(c - '0');
    }
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else if (c == '_' || c == '\'') {
      continue;
    } else {
      throw DomainError("malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw DomainError("malformed number '" + std::string(text) + "'");
  if (fraction_digits > exponent) {
    // Trailing fractional zeros are harmless ("2.50e1"); anything else is not an integer.
    std::size_t excess = fraction_digits - exponent;
    for (std::size_t i = digits.size() - excess; i < digits.size(); ++i)
      if (digits[i] != '0') throw DomainError("'" + std::string(text) + "' is not an integer");
    digits.resize(digits.size() - excess);
    fraction_digits = exponent;
  }
  WideNat value = 0;
  for (char c : digits) value = checked_add(checked_mul(value, 10), static_cast<WideNat>(c - '0'));
  return checked_mul(value, checked_pow(10, exponent - fraction_digits));
}

}  // namespace exdiv
