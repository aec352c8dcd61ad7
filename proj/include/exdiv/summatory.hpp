// Segmented factorization sieve and exact summatory functions with residuals
// against the asymptotic main terms.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "exdiv/arithfun.hpp"
#include "exdiv/rational.hpp"

namespace exdiv {

inline constexpr std::uint64_t kSieveGuard = 1'000'000'000;
/// sigma-type values grow like n, so their sums and quotient sums stop lower.
inline constexpr std::uint64_t kSigmaSumGuard = 100'000'000;
inline constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 15;

using SieveVisitor = std::function<void(std::uint64_t n, FactorView f)>;

/// Calls visit(n, factorization of n) for n = lo, ..., hi in ascending order
/// (n = 1 gets the empty factorization). Memory is bounded by `segment`.
void sieve_factorizations(std::uint64_t lo, std::uint64_t hi, const SieveVisitor& visit,
                          std::uint64_t segment = kDefaultSegment);

/// sum_k coefficient_k x^{exponent_k}.
struct MainTermModel {
  std::string description;  // empty when no main term is known
  std::vector<std::pair<double, double>> terms;
  double normalization_exponent = 1;

  double operator()(double x) const;
};

struct Checkpoint {
  std::uint64_t x;
  ExactRational sum;
  double main_term;
  double residual;             // sum - main_term
  double normalized_residual;  // |residual| / x^normalization_exponent
};

struct SummatoryReport {
  std::string function;
  MainTermModel model;
  std::vector<Checkpoint> checkpoints;  // ascending in x
};

struct SummatoryOptions {
  unsigned threads = 0;  // 0: default_threads()
  std::uint64_t segment = kDefaultSegment;
};

/// floor(x / 2^j) for j = count - 1, ..., 0, dropping zeros and repeats.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t x, unsigned count);

/// C1 x + C2 x^{1/2} for tau^(e)* and t_e, C3 x for mu^(e)*, C4 x + C5 x^{1/3}
/// for phi^(e)*; an empty model for everything else.
MainTermModel main_term_for(FunctionId id);
/// T x for the three quotients tau^(e)*/tau^(e), sigma^(e)*/sigma^(e),
/// phi^(e)/phi^(e)*; an empty model otherwise.
MainTermModel main_term_for_quotient(FunctionId numerator, FunctionId denominator);

SummatoryReport summatory(FunctionId id, std::uint64_t x, unsigned checkpoints, const SummatoryOptions& options = {});

/// Summatory function of an arbitrary integer-valued f; f must be reentrant.
SummatoryReport summatory_of(std::string name, const std::function<SignedWide(std::uint64_t, FactorView)>& f,
                             std::uint64_t x, unsigned checkpoints, MainTermModel model,
                             const SummatoryOptions& options = {});

/// Exact sum of numerator(n) / denominator(n). Both must be multiplicative.
SummatoryReport quotient_summatory(FunctionId numerator, FunctionId denominator, std::uint64_t x,
                                   unsigned checkpoints, const SummatoryOptions& options = {});

/// (x, |residual| / x^exponent) per checkpoint. Needs at least 3 checkpoints.
std::vector<std::pair<std::uint64_t, double>> residual_envelope(const SummatoryReport& report, double exponent);

/// Header `x,sum,main_term,residual,normalized_residual`, one row per checkpoint.
std::string to_csv(const SummatoryReport& report);

}  // namespace exdiv
