// Canonical factorization, primality, and the structural predicates every
// other module is built on.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exdiv/wide.hpp"

namespace exdiv {

struct PrimePower {
  WideNat prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Read-only view of a canonical factorization. All evaluators take this so
/// that sieve output can be consumed without allocating a Factorization.
using FactorView = std::span<const PrimePower>;

/// n = p_1^{a_1} ... p_r^{a_r} with p_1 < ... < p_r prime and every a_i >= 1.
/// The empty factorization is n = 1. A Factorization need not be
/// materializable: value() reports overflow for symbolic numbers past 2^128.
class Factorization {
 public:
  Factorization() = default;

  /// Validates ordering, exponents, and primality of every base.
  static Factorization from_parts(std::vector<PrimePower> parts);
  /// Skips validation. For producers that guarantee the invariants (sieves).
  static Factorization trusted(std::vector<PrimePower> parts) {
    Factorization f;
    f.parts_ = std::move(parts);
    return f;
  }

  const std::vector<PrimePower>& parts() const { return parts_; }
  FactorView view() const { return parts_; }
  operator FactorView() const { return parts_; }  // NOLINT(google-explicit-constructor)

  bool is_one() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Reconstructs n; throws OverflowError past 2^128 - 1.
  WideNat value() const;
  std::optional<WideNat> try_value() const;
  /// Natural log of n computed as sum a_i log p_i; works for symbolic values.
  double log_value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> parts_;
};

/// Value of a factorization view; throws OverflowError past 2^128 - 1.
WideNat value_of(FactorView f);
std::optional<WideNat> try_value_of(FactorView f);

/// Deterministic for all n < 2^128: Miller-Rabin with the first 13 prime
/// bases (proven exact below 3.3 * 10^24), strengthened by a strong Lucas
/// test (Baillie-PSW) above that bound.
bool is_prime(WideNat n);

/// Canonical factorization of n >= 1. Trial division by the primes below
/// 10^6, then Brent's variant of Pollard rho with fixed seeds.
Factorization factor(WideNat n);

/// All primes <= limit in ascending order. Requires 2 <= limit <= 10^9.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

inline constexpr std::uint64_t kPrimeTableGuard = 1'000'000'000;

struct Classification {
  bool squarefree = true;
  bool squarefull = true;
  bool e_squarefree = true;
  bool four_full = true;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(FactorView f);

/// Splits n = s * m with s squarefull (all exponents >= 2) and m squarefree.
std::pair<Factorization, Factorization> powerful_split(FactorView f);

/// (k, n)_*: the largest d with d | k and d a unitary divisor of n.
WideNat unitary_gcd(WideNat k, FactorView n);

/// Canonical text form "2^4*3^2*11^2"; exponent 1 is written bare, n = 1 is "1".
std::string to_text(FactorView f);
/// Parses the text form (or a plain integer, which is then factored). Bases
/// are validated; repeated bases are merged.
Factorization parse_factorization(std::string_view text);

}  // namespace exdiv
