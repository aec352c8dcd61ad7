// Maximal-order experiments: L(m) tables, constructed extremal families and
// running-maximum scans for the three limsup ratios
//   eq11: log tau^(e)*(n) log log n / log n       -> (1/2) log 2
//   eq12: sigma^(e)*(n) / (n log log n)             -> 6 e^gamma / pi^2
//   eq23: log phi^(e)*(n) log log n / log n        -> (log 4) / 5
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exdiv/factorint.hpp"

namespace exdiv {

enum class ExtremalTarget { eq11, eq12, eq23 };

std::string_view name(ExtremalTarget target);
ExtremalTarget parse_extremal_target(std::string_view text);
double target_limit(ExtremalTarget target);

/// f(m) = phi*(m), or tau*(m) = 2^omega(m): the value at p^m of phi^(e)* and tau^(e)*.
enum class ExponentFunction { phi_star, tau_star_of_exponent };

struct LEntry {
  unsigned m;
  std::uint64_t f;  // exact f(m)
  double L;         // log f(m) / m
};

struct LTable {
  std::vector<LEntry> entries;  // m = 1..m_max
  unsigned argmax;
};

/// Needs m_max >= 8.
LTable l_table(ExponentFunction f, unsigned m_max);

struct ChampionRecord {
  Factorization n;          // may be far beyond 128 bits
  std::string description;  // decimal n when it fits, else a symbolic description
  double ratio;
  double target_limit;
};

/// log f(n) log log n / log n or f(n) / (n log log n), computed from the
/// factorization in log space. Needs log log n > 0, i.e. n >= 16 in practice.
double extremal_ratio(ExtremalTarget target, FactorView n);

/// eq12: (p_1 ... p_k)^2; eq11: (p_1 ... p_k)^2; eq23: (p_1 ... p_k)^5, the
/// exponent being the argmax of the matching L table. Needs 1 <= k <= 10^4.
ChampionRecord constructed_sequence_ratio(ExtremalTarget target, unsigned k);

inline constexpr std::uint64_t kChampionScanGuard = 100'000'000;
inline constexpr std::uint64_t kChampionScanStart = 16;

/// Running maxima of the ratio over 16 <= n <= x; strictly increasing ratios.
std::vector<ChampionRecord> champion_scan(ExtremalTarget target, std::uint64_t x, unsigned threads = 0);

/// Header `n_or_description,ratio,target_limit`.
std::string to_csv(const std::vector<ChampionRecord>& records);

}  // namespace exdiv
