// Convolution algebras over exact rationals and local Euler-factor series.
//
// Four convolutions share one tabulated representation: Dirichlet, unitary
// (sum over d |_* n), exponential (b_i c_i = a_i) and e-unitary
// (b_i c_i = a_i with gcd(b_i, c_i) = 1). The e-unitary algebra is a
// commutative semigroup with identity mu^2; e_unitary_inverse solves
// f (.)* g = mu^2 by recursion on the exponent patterns.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "exdiv/arithfun.hpp"
#include "exdiv/rational.hpp"

namespace exdiv {

enum class ConvolutionKind { dirichlet, unitary, exponential, exp_unitary };

std::string_view name(ConvolutionKind kind);

/// Dense table of f(1), ..., f(limit).
class TabulatedFunction {
 public:
  explicit TabulatedFunction(std::uint64_t limit);

  static TabulatedFunction of(FunctionId id, std::uint64_t limit);
  static TabulatedFunction generate(std::uint64_t limit,
                                    const std::function<ExactRational(std::uint64_t, FactorView)>& fn);

  std::uint64_t limit() const { return values_.size() - 1; }
  const ExactRational& operator()(std::uint64_t n) const { return values_.at(n); }
  ExactRational& operator[](std::uint64_t n) { return values_.at(n); }

  friend bool operator==(const TabulatedFunction& a, const TabulatedFunction& b) { return a.values_ == b.values_; }

 private:
  std::vector<ExactRational> values_;  // index 0 unused
};

TabulatedFunction convolve(ConvolutionKind kind, const TabulatedFunction& f, const TabulatedFunction& g);

struct NotInvertibleError : DomainError {
  NotInvertibleError(std::uint64_t witness_n, const std::string& what) : DomainError(what), witness(witness_n) {}
  std::uint64_t witness;  // smallest n whose recursion divides by zero
};

/// g with f (.)* g = mu^2 on [1, limit]. Exists iff f(1) != 0 and f(q) != 0
/// at every squarefree q <= limit; otherwise NotInvertibleError names the
/// smallest failing q.
TabulatedFunction e_unitary_inverse(const TabulatedFunction& f);

/// Truncated power series sum_{a=0}^{A} c_a x^a, x standing for p^{-s}.
/// Coefficients past the truncation are unknown, not zero.
class LocalSeries {
 public:
  LocalSeries(WideNat prime, std::vector<ExactRational> coefficients);

  WideNat prime() const { return prime_; }
  unsigned truncation() const { return static_cast<unsigned>(coefficients_.size() - 1); }
  const std::vector<ExactRational>& coefficients() const { return coefficients_; }
  /// nullopt past the truncation.
  std::optional<ExactRational> coefficient(unsigned a) const;

  friend bool operator==(const LocalSeries&, const LocalSeries&) = default;

 private:
  WideNat prime_;
  std::vector<ExactRational> coefficients_;
};

inline constexpr unsigned kMaxLocalTruncation = 64;

/// f(p^a) for a = 0..A. Requires a multiplicative id and A <= 64.
LocalSeries local_series(FunctionId id, WideNat p, unsigned A);

/// Multiplies by (1 - x^k) for each numerator shift (removing a zeta(ks)
/// factor) and by 1/(1 - x^k) for each denominator shift (restoring one).
/// Exact through the input truncation.
LocalSeries series_divide_zeta_shape(const LocalSeries& s, std::span<const unsigned> numerator_shifts,
                                     std::span<const unsigned> denominator_shifts);

/// Truncated product of two local series at the same prime.
LocalSeries series_multiply(const LocalSeries& a, const LocalSeries& b);

/// Local factor of the series v in l_4(n) 2^omega(n) = sum_{d^4 e = n} tau(d) v(e):
/// 1 + 2x^5 + 2x^6 + 2x^7 - x^8 - 2x^9 - 2x^10 - 2x^11. Requires A >= 11.
LocalSeries v_coefficients(WideNat p, unsigned A);

/// v(e) for the multiplicative v above.
SignedWide v_value(FactorView e);

/// Checks l_4(n) 2^omega(n) = sum_{d^4 | n} tau(d) v(n / d^4).
bool verify_l4_identity(WideNat n);
bool verify_l4_identity(FactorView n);

}  // namespace exdiv
