// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "exdiv/constants.hpp"
#include "exdiv/divisors.hpp"
#include "exdiv/extremal.hpp"
#include "exdiv/perfect.hpp"
#include "exdiv/summatory.hpp"
#include "exdiv/verify.hpp"

using namespace exdiv;
using enum FunctionId;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failures += !o.pass;
  while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
  std::printf("%s criterion %d %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome from_checks(const std::vector<CheckResult>& results) {
  std::string detail;
  for (const auto& c : results)
    if (!c.pass) detail += (detail.empty() ? "" : "; ") + c.claim + " (" + c.detail + ")";
  return {detail.empty(), detail};
}

std::vector<CheckResult> select(const std::vector<CheckResult>& all, bool cofactors) {
  std::vector<CheckResult> out;
  for (const auto& c : all) {
    const bool is_cofactor = c.claim.rfind("h(", 0) == 0 || c.claim.rfind("w(", 0) == 0 ||
                             c.claim.rfind("v ", 0) == 0 || c.claim.rfind("l_4", 0) == 0;
    if (is_cofactor == cofactors) out.push_back(c);
  }
  return out;
}

std::string criterion2_csv(unsigned threads) {
  SearchFilter f;
  f.powerful_only = true;
  return to_csv(search(PerfectKind::e_perfect, 10'000'000'000, f, {threads, 1}));
}

std::string criterion3_csv(unsigned threads) {
  SearchFilter f;
  f.odd_only = true;
  return to_csv(search(PerfectKind::e_unitary, 10'000'000'000, f, {threads, 1}));
}

struct ResidualRun {
  std::vector<SummatoryReport> reports;
  std::string csv;
};

ResidualRun criterion7_run(unsigned threads) {
  constexpr std::uint64_t x = std::uint64_t{1} << 26;  // largest 2^k <= 10^8
  constexpr unsigned checkpoints = 17;                 // 2^10 ... 2^26
  const SummatoryOptions opt{threads};
  ResidualRun run;
  for (auto id : {tau_e_star, phi_e_star, mu_e_star}) run.reports.push_back(summatory(id, x, checkpoints, opt));
  for (auto [n, d] : {std::pair{tau_e_star, tau_e}, {sigma_e_star, sigma_e}, {phi_e, phi_e_star}})
    run.reports.push_back(quotient_summatory(n, d, x, checkpoints, opt));
  for (const auto& r : run.reports) run.csv += "# " + r.function + "\n" + to_csv(r);
  return run;
}

}  // namespace

int main() {
  report(1, "paper-value regression", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::string bad;
    auto need = [&](bool ok, const char* what) {
      if (!ok) bad += std::string(bad.empty() ? "" : "; ") + what;
    };
    need(eval(sigma_e_star, factor(4096)) == 4122, "sigma^(e)*(2^12) = 4122");
    need(enumerate(factor(4096), DivisorKind::exp_unitary) == std::vector<WideNat>{2, 8, 16, 4096},
         "e-unitary divisors of 2^12");
    need(eval(sigma_e, factor(36)) == 72 && eval(sigma_e_star, factor(36)) == 72, "sigma^(e)(36) = sigma^(e)*(36) = 72");
    need(is_perfect(PerfectKind::e_unitary, factor(1800)) && is_perfect(PerfectKind::e_unitary, factor(2700)),
         "1800 and 2700 e-unitary perfect");
    need(is_perfect(PerfectKind::e_perfect, factor(17424)) && !is_perfect(PerfectKind::e_unitary, factor(17424)),
         "17424 e-perfect only");
    std::vector<WideNat> unitary;
    for (const auto& r : search(PerfectKind::unitary, 100000, {})) unitary.push_back(r.n.value());
    need(unitary == std::vector<WideNat>{6, 60, 90, 87360}, "unitary-perfect search to 10^5");
    need(is_perfect(PerfectKind::unitary, factor(parse_wide("146361946186458562560000"))), "24-digit unitary perfect");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    need(secs < 1, "runtime under 1 s");
    return Outcome{bad.empty(), bad};
  });

  report(2, "squarefull e-perfect numbers to 10^10", [] {
    const std::string expected =
        "n,factorization,kind,e_squarefree\n36,2^2*3^2,e-perfect,true\n1800,2^3*3^2*5^2,e-perfect,true\n"
        "2700,2^2*3^3*5^2,e-perfect,true\n17424,2^4*3^2*11^2,e-perfect,false\n"
        "1306800,2^4*3^3*5^2*11^2,e-perfect,false\n4769856,2^6*3^2*7^2*13^2,e-perfect,true\n"
        "238492800,2^7*3^2*5^2*7^2*13^2,e-perfect,true\n357739200,2^6*3^3*5^2*7^2*13^2,e-perfect,true\n";
    const auto got = criterion2_csv(1);
    return Outcome{got == expected, got == expected ? "" : "got\n" + got};
  });

  report(3, "no odd e-unitary perfect number to 10^10; parity lemma", [] {
    const auto csv = criterion3_csv(1);
    bool parity = true;
    for (std::uint64_t p : primes_up_to(1000))
      for (std::uint32_t a = 2; p > 2 && a <= 30; ++a) {
        BigInt pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
        const BigInt s = prime_power_value_big(sigma_e_star, p, a);
        parity = parity && s % 2 == 0 && s < 2 * pa;
      }
    const bool empty = csv == "n,factorization,kind,e_squarefree\n";
    return Outcome{empty && parity, std::string(empty ? "" : "odd hits found ") + (parity ? "" : "parity lemma fails")};
  });

  std::vector<CheckResult> algebra;
  report(4, "e-unitary convolution algebra", [&] {
    algebra = run_suite(VerifySuite::algebra, {10000, 0});
    return from_checks(select(algebra, false));
  });
  report(5, "closed forms against brute-force oracles", [] { return from_checks(run_suite(VerifySuite::oracles, {10000, 0})); });
  report(6, "Dirichlet-series cofactors and the l_4 identity (run with criterion 4)",
         [&] { return from_checks(select(algebra, true)); });

  ResidualRun residuals;
  report(7, "normalized residuals bounded, non-trending over the last 5 of 2^10..2^26", [&] {
    residuals = criterion7_run(1);
    std::string bad, summary;
    for (const auto& r : residuals.reports) {
      const auto env = residual_envelope(r, r.model.normalization_exponent);
      summary += (summary.empty() ? "" : ", ") + r.function + fmt(" last %.3g", env.back().second);
      if (!bounded_non_trending(env, 5)) bad += (bad.empty() ? "" : ", ") + r.function;
    }
    return Outcome{bad.empty(), bad.empty() ? summary : "trending: " + bad};
  });

  report(8, "constants stable under P and A doubling; zeta; C1 from the sieve", [] {
    std::string bad, worst;
    double worst_ratio = 0;
    for (ConstantId id : kAllConstants) {
      if (id == ConstantId::SIGMA_LIMIT) continue;
      const auto a = euler_product(id, 100000, 32), b = euler_product(id, 200000, 64);
      const double ratio = std::abs(a.value - b.value) / a.tail_bound;
      if (ratio > worst_ratio) worst_ratio = ratio, worst = std::string(name(id));
      if (!(std::abs(a.value - b.value) < a.tail_bound)) bad += std::string(name(id)) + " moved beyond its tail bound; ";
    }
    const double z2 = zeta_real(2), z4 = zeta_real(4);
    if (std::abs(z2 / (M_PI * M_PI / 6) - 1) > 1e-12) bad += "zeta(2); ";
    if (std::abs(z4 / (std::pow(M_PI, 4) / 90) - 1) > 1e-12) bad += "zeta(4); ";
    const std::uint64_t x = 100'000'000;
    const auto sum = summatory(tau_e_star, x, 1);
    const double c1 = euler_product(ConstantId::C1, 100000, 32).value;
    const double c2 = euler_product(ConstantId::C2, 100000, 32).value;
    const double est = sum.checkpoints.back().sum.get_d() / x - c2 / std::sqrt(static_cast<double>(x));
    if (std::abs(est / c1 - 1) > 1e-6) bad += fmt("sieve estimate %.9f vs C1 %.9f; ", est, c1);
    const std::string info = fmt("sieve C1 estimate %.9f vs %.9f", est, c1) +
                             fmt(", largest move %.2g of tail bound (", worst_ratio) + worst + ")";
    return Outcome{bad.empty(), bad.empty() ? info : bad + info};
  });

  report(9, "extremal trends", [] {
    std::string bad, info;
    const auto t = l_table(ExponentFunction::phi_star, 64);
    if (t.argmax != 5 || t.entries[4].f != 4) bad += "L table argmax is not 5 with phi*(5) = 4; ";
    const double limit = target_limit(ExtremalTarget::eq12);
    double last = 0;
    for (unsigned k : {10u, 100u, 1000u, 10000u}) {
      const double r = constructed_sequence_ratio(ExtremalTarget::eq12, k).ratio;
      info += fmt("eq12 k=%.0f: %.6f; ", k, r);
      if (r <= last) bad += fmt("eq12 ratio at k=%.0f (%.6f) is not above the previous checkpoint; ", k, r);
      if (r >= limit) bad += fmt("eq12 ratio at k=%.0f exceeds %.6f; ", k, limit);
      last = r;
    }
    const auto near = constructed_sequence_ratio(ExtremalTarget::eq12, 9592);  // p_k = 99991
    if (!(near.ratio < limit && near.ratio > 0.9 * limit)) bad += fmt("eq12 at p_k = 99991: %.6f not within 10%%; ", near.ratio);
    const double envelope = 0.5 * std::log(2.0) + 0.2;
    const auto scan = champion_scan(ExtremalTarget::eq11, 1'000'000);
    bool increasing = true;
    for (std::size_t i = 1; i < scan.size(); ++i) increasing = increasing && scan[i].ratio > scan[i - 1].ratio;
    if (!increasing) bad += "eq11 records not increasing; ";
    const auto& top = scan.back();
    if (!(top.ratio < envelope))
      bad += "eq11 scan to 10^6 reaches " + fmt("%.6f", top.ratio) + " at n = " + top.description +
             fmt(", above (1/2)log 2 + 0.2 = %.6f; ", envelope);
    return Outcome{bad.empty(), bad + info};
  });

  report(10, "criteria 2, 3, 7 byte-identical with 1, 4, 8 threads", [&] {
    std::string bad;
    const std::string c2 = criterion2_csv(1), c3 = criterion3_csv(1);
    const std::string c7 = residuals.csv.empty() ? criterion7_run(1).csv : residuals.csv;
    for (unsigned threads : {4u, 8u}) {
      if (criterion2_csv(threads) != c2) bad += "criterion 2 differs at " + std::to_string(threads) + " threads; ";
      if (criterion3_csv(threads) != c3) bad += "criterion 3 differs at " + std::to_string(threads) + " threads; ";
      if (criterion7_run(threads).csv != c7) bad += "criterion 7 differs at " + std::to_string(threads) + " threads; ";
    }
    return Outcome{bad.empty(), bad};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
