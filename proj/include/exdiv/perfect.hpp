// Powerful-number enumeration and exhaustive perfect-number searches for the
// unitary, exponential and e-unitary divisor sums.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exdiv/arithfun.hpp"

namespace exdiv {

/// sigma*(n) = 2n, sigma^(e)(n) = 2n, sigma^(e)*(n) = 2n respectively.
enum class PerfectKind { unitary, e_perfect, e_unitary };

/// "unitary-perfect", "e-perfect", "e-unitary-perfect".
std::string_view name(PerfectKind kind);
/// Accepts the names above and the short forms unitary, e_perfect, e_unitary.
PerfectKind parse_perfect_kind(std::string_view text);
FunctionId sigma_of(PerfectKind kind);

struct SearchFilter {
  bool odd_only = false;
  std::optional<WideNat> coprime_to;
  bool require_non_e_squarefree = false;
  bool powerful_only = false;
};

inline constexpr std::uint64_t kPowerfulGuard = 1'000'000'000'000;
inline constexpr std::uint64_t kExponentialSearchGuard = 10'000'000'000;
inline constexpr std::uint64_t kUnitarySearchGuard = 10'000'000;

/// Calls visit for every squarefull n <= limit (1 included) in ascending order.
void for_each_powerful(std::uint64_t limit, const std::function<void(std::uint64_t n, FactorView f)>& visit);
std::vector<Factorization> powerful_numbers(std::uint64_t limit);

/// Exact sigma_kind(n) == 2n. Throws OverflowError if sigma_kind(n) does not fit.
bool is_perfect(PerfectKind kind, FactorView n);

struct KernelVerdict {
  Factorization kernel;  // the squarefull part of n
  bool holds;            // whether the kernel is perfect, hence n is
};

/// Exponent-1 primes satisfy sigma(p) = p for both exponential kinds, so n is
/// perfect exactly when its squarefull part is. DomainError for the unitary kind.
KernelVerdict reduce_to_powerful_kernel(FactorView n, PerfectKind kind);

struct SearchRecord {
  Factorization n;
  PerfectKind kind;
  bool e_squarefree;
  bool indeterminate;  // sigma overflowed 128 bits; not decided
};

struct SearchOptions {
  unsigned threads = 0;
  std::uint64_t from = 1;  // report only n >= from, for resuming by range
};

/// Complete list of hits n <= limit satisfying every filter, ascending. The
/// unitary kind scans every n (limit <= 10^7); the exponential kinds scan the
/// squarefull kernels only (limit <= 10^10) and report kernels.
std::vector<SearchRecord> search(PerfectKind kind, std::uint64_t limit, const SearchFilter& filter,
                                 const SearchOptions& options = {});

/// Header `n,factorization,kind,e_squarefree`.
std::string to_csv(const std::vector<SearchRecord>& records);

}  // namespace exdiv
