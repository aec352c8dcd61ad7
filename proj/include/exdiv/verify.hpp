// Self-check suites behind `exdiv verify`: exact algebra, brute-force oracles,
// the published values, and residual envelopes of the summatory sums.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exdiv {

enum class VerifySuite { algebra, oracles, paper_values, residuals };

/// "algebra", "oracles", "paper-values", "residuals".
std::string_view name(VerifySuite suite);
VerifySuite parse_verify_suite(std::string_view text);

struct CheckResult {
  std::string claim;
  bool pass;
  std::string detail;  // exception text or the failing witness; empty on PASS
};

struct VerifyOptions {
  // Suite scale; 0 picks the default (algebra and oracles 10^4, paper-values
  // 10^9 for the squarefull searches, residuals 10^6).
  std::uint64_t limit = 0;
  unsigned threads = 0;
};

std::uint64_t default_limit(VerifySuite suite);
std::vector<CheckResult> run_suite(VerifySuite suite, const VerifyOptions& options = {});

/// "PASS <claim>" or "FAIL <claim>: <detail>", one line each.
std::string format_results(const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

/// Every value finite, the maximum over the last `tail` points at most twice
/// the maximum before them, and the tail not strictly increasing.
bool bounded_non_trending(const std::vector<std::pair<std::uint64_t, double>>& envelope, std::size_t tail = 5);

}  // namespace exdiv
