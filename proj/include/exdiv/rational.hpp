// Exact rationals (GMP) and conversions from the 128-bit types.
#pragma once

#include <gmpxx.h>

#include <string>

#include "exdiv/wide.hpp"

namespace exdiv {

/// Canonical reduced fraction with positive denominator, arbitrary precision.
using ExactRational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms; den must be nonzero.
ExactRational make_rational(long num, long den);

BigInt to_big(WideNat v);
BigInt to_big(SignedWide v);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const ExactRational& q);

}  // namespace exdiv
