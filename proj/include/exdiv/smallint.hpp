// Classical functions of a small integer. The exponential divisor systems
// apply these to the exponents a_i, so they sit below everything else.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace exdiv::small {

/// (prime, exponent) pairs of m >= 1 by trial division.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_small(std::uint64_t m);

std::vector<std::uint64_t> divisors(std::uint64_t m);
/// Unitary divisors d | m with gcd(d, m/d) = 1, ascending.
std::vector<std::uint64_t> unitary_divisors(std::uint64_t m);

std::uint64_t tau(std::uint64_t m);
std::uint32_t omega(std::uint64_t m);
int mu(std::uint64_t m);
std::uint64_t phi(std::uint64_t m);
/// Unitary totient: product of (p^a - 1) over the prime powers of m.
std::uint64_t phi_star(std::uint64_t m);
bool is_squarefree(std::uint64_t m);

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace exdiv::small
