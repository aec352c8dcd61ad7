// The five divisor systems: ordinary, unitary, exponential, e-unitary, and
// unitary e-divisors, plus exponential coprimality.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "exdiv/factorint.hpp"

namespace exdiv {

enum class DivisorKind {
  all,          // d | n
  unitary,      // d | n, gcd(d, n/d) = 1
  exponential,  // b_i | a_i
  exp_unitary,  // b_i a unitary divisor of a_i
  unitary_exp,  // d | n with d and n/d exponentially coprime
};

std::string_view name(DivisorKind kind);
/// Accepts "exp-unitary" and "exp_unitary" spellings.
DivisorKind parse_divisor_kind(std::string_view text);

/// Admissible exponents b of p^b in a divisor of p^a, ascending.
std::vector<std::uint32_t> admissible_exponents(std::uint32_t a, DivisorKind kind);

inline constexpr std::uint64_t kMaxEnumeratedDivisors = std::uint64_t{1} << 20;

/// Sorted divisor set of the requested kind. n = 1 yields {1} for every kind;
/// unitary_exp of a non-squarefull n > 1 is empty.
std::vector<WideNat> enumerate(FactorView f, DivisorKind kind);

/// Closed-form cardinality of enumerate(f, kind).
WideNat count(FactorView f, DivisorKind kind);

/// Same prime support and pairwise coprime exponents prime by prime.
bool exponentially_coprime(FactorView a, FactorView b);

}  // namespace exdiv
