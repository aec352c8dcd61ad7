// Mean-value constants as truncated Euler products with rigorous tail bounds,
// and zeta on the positive real axis.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "exdiv/wide.hpp"

namespace exdiv {

/// C1, C2: the x and x^{1/2} coefficients of sum tau^(e)*(n).
/// C3: the x coefficient of sum mu^(e)*(n).
/// C4, C5: the x and x^{1/3} coefficients of sum phi^(e)*(n).
/// T5_*: the x coefficients of the quotient sums tau^(e)*/tau^(e),
/// sigma^(e)*/sigma^(e) and phi^(e)/phi^(e)*.
/// SIGMA_LIMIT: 6 e^gamma / pi^2, the limsup of sigma^(e)*(n) / (n log log n).
enum class ConstantId { C1, C2, C3, C4, C5, T5_TAU, T5_SIGMA, T5_PHI, SIGMA_LIMIT };

inline constexpr std::array kAllConstants = {ConstantId::C1,     ConstantId::C2,       ConstantId::C3,
                                             ConstantId::C4,     ConstantId::C5,       ConstantId::T5_TAU,
                                             ConstantId::T5_SIGMA, ConstantId::T5_PHI, ConstantId::SIGMA_LIMIT};

std::string_view name(ConstantId id);
ConstantId parse_constant_id(std::string_view text);

struct EulerProductEstimate {
  ConstantId constant_id;
  double value;
  WideNat prime_limit;
  unsigned series_limit;
  double tail_bound;  // |true value - value| <= tail_bound
};

/// zeta(s) for real s > 0, s != 1, from the alternating eta series with
/// Cohen-Villegas-Zagier acceleration.
double zeta_real(double s);
long double zeta_real_long(long double s);

/// Euler's constant to 30 digits.
inline constexpr long double kEulerGamma = 0.577215664901532860606512090082L;
/// H_n - log n - 1/(2n) + 1/(12 n^2), which differs from gamma by O(n^-4).
long double euler_gamma_from_harmonic(std::uint64_t n);

/// Product over p <= P of the local factor. Each local series is summed to at
/// least A terms and extended until its own tail is negligible; the reported
/// tail_bound covers the series tails, the primes above P and rounding.
/// C1-C5 first divide out zeta factors whose product over all primes is known
/// exactly, so the primes above P contribute only at high order.
EulerProductEstimate euler_product(ConstantId id, WideNat prime_limit, unsigned series_limit);

/// Checks the series as written for the constant against the generic local
/// factor (the function's local series times the zeta shape removed).
bool internal_consistency_check(ConstantId id);

/// "<id> = <value> ± <tail_bound> (P=<prime_limit>, A=<series_limit>)"
std::string to_text(const EulerProductEstimate& e);

}  // namespace exdiv
