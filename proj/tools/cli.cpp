#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "exdiv/constants.hpp"
#include "exdiv/divisors.hpp"
#include "exdiv/extremal.hpp"
#include "exdiv/perfect.hpp"
#include "exdiv/summatory.hpp"
#include "exdiv/verify.hpp"

namespace exdiv::cli {

namespace {

constexpr int kUsage = 1, kCapacity = 2, kVerifyFailed = 3;

std::uint64_t to_u64(const std::string& text) {
  const WideNat v = parse_wide(text);
  if (v > WideNat{UINT64_MAX}) throw CapacityError("'" + text + "' exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

// Integer or factorization text such as 2^4*3^2.
Factorization parse_n(const std::string& text) {
  if (text.find_first_of("^*") != std::string::npos) return parse_factorization(text);
  return factor(parse_wide(text));
}

std::string join(const std::vector<WideNat>& values) {
  std::string out;
  for (WideNat v : values) out += (out.empty() ? "" : ",") + to_string(v);
  return out;
}

struct Flags {
  unsigned threads = 0;
  std::string out;
  std::vector<std::string> numbers;
  std::string kind, fn, num, den, id = "all", suite, target;
  std::string limit, checkpoints = "10", primes = "1e5", terms = "32", from = "1", coprime_to, constructed;
  bool odd = false, non_e_squarefree = false, powerful = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exdiv: exponential unitary divisors workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--threads", f.threads, "worker threads (0: hardware)")->envname("EXDIV_THREADS");
  app.add_option("--out", f.out, "write data to this file instead of stdout");

  auto* factor_cmd = app.add_subcommand("factor", "prime factorization as p^a*q^b");
  factor_cmd->add_option("n", f.numbers)->required();
  auto* divisors_cmd = app.add_subcommand("divisors", "divisor set of the given system");
  divisors_cmd->add_option("--kind", f.kind, "all, unitary, exponential, exp-unitary, unitary-exp")->default_str("all");
  divisors_cmd->add_option("n", f.numbers)->required();
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an arithmetic function");
  eval_cmd->add_option("--fn", f.fn)->required();
  eval_cmd->add_option("n", f.numbers)->required();
  auto* sum_cmd = app.add_subcommand("sum", "summatory function with residuals, CSV");
  sum_cmd->add_option("--fn", f.fn)->required();
  sum_cmd->add_option("--limit", f.limit)->default_str("1e6");
  sum_cmd->add_option("--checkpoints", f.checkpoints);
  auto* qsum_cmd = app.add_subcommand("quotient-sum", "exact sum of num(n)/den(n), CSV");
  qsum_cmd->add_option("--num", f.num)->required();
  qsum_cmd->add_option("--den", f.den)->required();
  qsum_cmd->add_option("--limit", f.limit)->default_str("1e6");
  qsum_cmd->add_option("--checkpoints", f.checkpoints);
  auto* const_cmd = app.add_subcommand("constants", "Euler-product constants with tail bounds");
  const_cmd->add_option("--id", f.id, "C1..C5, T5_TAU, T5_SIGMA, T5_PHI, SIGMA_LIMIT or all");
  const_cmd->add_option("--primes", f.primes, "prime limit P");
  const_cmd->add_option("--terms", f.terms, "local series terms A");
  auto* search_cmd = app.add_subcommand("search", "perfect-number search, CSV");
  search_cmd->add_option("--kind", f.kind)->required();
  search_cmd->add_option("--limit", f.limit)->default_str("1e8, capped at 1e7 for unitary-perfect");
  search_cmd->add_option("--from", f.from);
  search_cmd->add_flag("--odd", f.odd);
  search_cmd->add_option("--coprime-to", f.coprime_to);
  search_cmd->add_flag("--non-e-squarefree", f.non_e_squarefree);
  search_cmd->add_flag("--powerful", f.powerful);
  auto* champ_cmd = app.add_subcommand("champions", "running maxima of a limsup ratio, CSV");
  champ_cmd->add_option("--target", f.target, "eq11, eq12 or eq23")->required();
  champ_cmd->add_option("--limit", f.limit)->default_str("1e6");
  champ_cmd->add_option("--constructed", f.constructed, "report the constructed family for k = 1..K instead");
  auto* verify_cmd = app.add_subcommand("verify", "self-check suite");
  verify_cmd->add_option("--suite", f.suite, "algebra, oracles, paper-values, residuals")->required();
  verify_cmd->add_option("--limit", f.limit);

  std::vector<std::string> argv_store{"exdiv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "exdiv: " << e.what() << "\n";
    return kUsage;
  }

  const auto limit_or = [&](std::uint64_t fallback) { return f.limit.empty() ? fallback : to_u64(f.limit); };
  std::ostringstream data;
  int code = 0;
  try {
    if (factor_cmd->parsed()) {
      for (const auto& n : f.numbers) data << to_text(parse_n(n)) << "\n";
    } else if (divisors_cmd->parsed()) {
      const DivisorKind kind = parse_divisor_kind(f.kind.empty() ? "all" : f.kind);
      for (const auto& n : f.numbers) data << join(enumerate(parse_n(n), kind)) << "\n";
    } else if (eval_cmd->parsed()) {
      const FunctionId id = parse_function_id(f.fn);
      for (const auto& n : f.numbers) data << to_string(eval(id, parse_n(n))) << "\n";
    } else if (sum_cmd->parsed()) {
      data << to_csv(summatory(parse_function_id(f.fn), limit_or(1'000'000),
                               static_cast<unsigned>(to_u64(f.checkpoints)), {f.threads}));
    } else if (qsum_cmd->parsed()) {
      data << to_csv(quotient_summatory(parse_function_id(f.num), parse_function_id(f.den), limit_or(1'000'000),
                                        static_cast<unsigned>(to_u64(f.checkpoints)), {f.threads}));
    } else if (const_cmd->parsed()) {
      std::vector<ConstantId> ids(kAllConstants.begin(), kAllConstants.end());
      if (f.id != "all") ids = {parse_constant_id(f.id)};
      for (ConstantId id : ids)
        data << to_text(euler_product(id, parse_wide(f.primes), static_cast<unsigned>(to_u64(f.terms)))) << "\n";
    } else if (search_cmd->parsed()) {
      const PerfectKind kind = parse_perfect_kind(f.kind);
      SearchFilter filter;
      filter.odd_only = f.odd;
      filter.require_non_e_squarefree = f.non_e_squarefree;
      filter.powerful_only = f.powerful;
      if (!f.coprime_to.empty()) filter.coprime_to = parse_wide(f.coprime_to);
      const std::uint64_t fallback = kind == PerfectKind::unitary ? kUnitarySearchGuard : 100'000'000;
      data << to_csv(search(kind, limit_or(fallback), filter, {f.threads, to_u64(f.from)}));
    } else if (champ_cmd->parsed()) {
      const ExtremalTarget target = parse_extremal_target(f.target);
      if (!f.constructed.empty()) {
        std::vector<ChampionRecord> records;
        const auto k_max = to_u64(f.constructed);
        if (k_max > 10000) throw CapacityError("--constructed: k is at most 10^4");
        for (unsigned k = 1; k <= k_max; ++k) records.push_back(constructed_sequence_ratio(target, k));
        data << to_csv(records);
      } else {
        data << to_csv(champion_scan(target, limit_or(1'000'000), f.threads));
      }
    } else if (verify_cmd->parsed()) {
      const auto results = run_suite(parse_verify_suite(f.suite), {limit_or(0), f.threads});
      data << format_results(results);
      if (!all_pass(results)) code = kVerifyFailed;
    }
  } catch (const OverflowError& e) {
    err << "exdiv: " << e.what() << "\n";
    return kCapacity;
  } catch (const CapacityError& e) {
    err << "exdiv: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "exdiv: " << e.what() << "\n";
    return kUsage;
  }

  if (f.out.empty()) {
    out << data.str();
  } else {
    std::ofstream file(f.out, std::ios::binary);
    file << data.str();
    if (!file) {
      err << "exdiv: cannot write " << f.out << "\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace exdiv::cli
