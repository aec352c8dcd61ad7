// Catalog of the arithmetic functions built from the five divisor systems.
//
// Every catalog entry except omega is multiplicative and is evaluated from a
// prime-power rule f(p^a). The *_bruteforce routines evaluate the defining
// counts and divisor sums literally and serve as independent oracles.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "exdiv/factorint.hpp"
#include "exdiv/rational.hpp"

namespace exdiv {

enum class FunctionId {
  tau,
  sigma,
  omega,
  mu,
  phi,
  tau_star,
  sigma_star,
  mu_star,
  phi_star,
  tau_e,
  sigma_e,
  mu_e,
  phi_e,
  tau_e_star,
  sigma_e_star,
  mu_e_star,
  phi_e_star,
  t_e,
  chi_squarefree,
  chi_squarefull,
  chi_e_squarefree,
  chi_4_full,
};

inline constexpr std::array kAllFunctions = {
    FunctionId::tau,          FunctionId::sigma,          FunctionId::omega,         FunctionId::mu,
    FunctionId::phi,          FunctionId::tau_star,       FunctionId::sigma_star,    FunctionId::mu_star,
    FunctionId::phi_star,     FunctionId::tau_e,          FunctionId::sigma_e,       FunctionId::mu_e,
    FunctionId::phi_e,        FunctionId::tau_e_star,     FunctionId::sigma_e_star,  FunctionId::mu_e_star,
    FunctionId::phi_e_star,   FunctionId::t_e,            FunctionId::chi_squarefree, FunctionId::chi_squarefull,
    FunctionId::chi_e_squarefree, FunctionId::chi_4_full,
};

std::string_view name(FunctionId id);
FunctionId parse_function_id(std::string_view text);

/// omega is additive; everything else in the catalog is multiplicative.
constexpr bool is_multiplicative(FunctionId id) { return id != FunctionId::omega; }

/// sigma-type functions: values grow like n, so summation ranges are capped lower.
constexpr bool is_sigma_type(FunctionId id) {
  return id == FunctionId::sigma || id == FunctionId::sigma_star || id == FunctionId::sigma_e ||
         id == FunctionId::sigma_e_star;
}

/// f(p^a) for a multiplicative catalog function; a = 0 gives 1.
SignedWide prime_power_value(FunctionId id, WideNat p, std::uint32_t a);
/// Same rule in arbitrary precision; never overflows.
BigInt prime_power_value_big(FunctionId id, WideNat p, std::uint32_t a);

/// f(n) from the prime-power rules. eval(id, 1) = 1 for every multiplicative
/// id; omega(1) = 0. Throws OverflowError when the value leaves 128 bits.
SignedWide eval(FunctionId id, FactorView f);

inline constexpr WideNat kBruteforceGuard = 1'000'000;

/// #{1 <= k <= n : (k, n)_* = 1}, counted literally. Requires n <= 10^6.
WideNat phi_star_bruteforce(WideNat n);

/// #{d = prod p_i^{b_i} : 1 <= b_i <= a_i, (b_i, a_i)_* = 1} over exponent
/// tuples. Requires prod a_i <= 10^6.
WideNat phi_e_star_bruteforce(FactorView f);

/// Defining divisor sum for tau/sigma-type ids over the matching divisor
/// system (enumerated by the divisors module). Other ids throw DomainError.
SignedWide eval_bruteforce_by_divisors(FunctionId id, FactorView f);

}  // namespace exdiv
