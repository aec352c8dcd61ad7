#include "exdiv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "exdiv/convolve.hpp"
#include "exdiv/divisors.hpp"
#include "exdiv/extremal.hpp"
#include "exdiv/perfect.hpp"
#include "exdiv/summatory.hpp"

namespace exdiv {

namespace {

using enum FunctionId;

class Runner {
 public:
  // Runs one claim; any exception counts as a failure with its message.
  void check(std::string claim, const std::function<std::string()>& body) {
    try {
      std::string witness = body();
      results_.push_back({std::move(claim), witness.empty(), std::move(witness)});
    } catch (const std::exception& e) {
      results_.push_back({std::move(claim), false, e.what()});
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string at(std::uint64_t n) { return "fails at n = " + std::to_string(n); }

// First n where the tables differ, or "".
std::string compare(const TabulatedFunction& a, const TabulatedFunction& b) {
  for (std::uint64_t n = 1; n <= a.limit(); ++n)
    if (a(n) != b(n)) return at(n);
  return {};
}

TabulatedFunction random_table(std::uint64_t limit, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 5);
  return TabulatedFunction::generate(limit, [&](std::uint64_t, FactorView) { return make_rational(num(rng), den(rng)); });
}

std::string sweep(std::uint64_t limit, const std::function<bool(std::uint64_t, const Factorization&)>& ok) {
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (!ok(n, factor(n))) return at(n);
  return {};
}

std::string lim(std::uint64_t x) { return to_string(WideNat{x}); }

std::vector<CheckResult> algebra(std::uint64_t L) {
  Runner r;
  const std::uint64_t small = std::min<std::uint64_t>(L, 2000);
  const auto mu2 = TabulatedFunction::of(chi_squarefree, L);
  const auto I = TabulatedFunction::generate(L, [](std::uint64_t, FactorView) { return ExactRational(1); });
  r.check("mu^2 is the e-unitary identity on n <= " + lim(L), [&] {
    std::mt19937_64 rng(1);
    const auto f = random_table(L, rng);
    if (auto w = compare(convolve(ConvolutionKind::exp_unitary, mu2, f), f); !w.empty()) return w;
    return compare(convolve(ConvolutionKind::exp_unitary, TabulatedFunction::of(sigma, L), mu2),
                   TabulatedFunction::of(sigma, L));
  });
  r.check("I (.)* mu^(e)* = mu^2 on n <= " + lim(L), [&] {
    return compare(convolve(ConvolutionKind::exp_unitary, I, TabulatedFunction::of(mu_e_star, L)), mu2);
  });
  r.check("(.)* commutative and associative on 100 random rational triples, n <= " + lim(small), [&] {
    std::mt19937_64 rng(2);
    constexpr auto k = ConvolutionKind::exp_unitary;
    for (int t = 0; t < 100; ++t) {
      const auto f = random_table(small, rng), g = random_table(small, rng), h = random_table(small, rng);
      if (auto w = compare(convolve(k, f, g), convolve(k, g, f)); !w.empty()) return "commutativity " + w;
      if (auto w = compare(convolve(k, convolve(k, f, g), h), convolve(k, f, convolve(k, g, h))); !w.empty())
        return "associativity " + w;
    }
    return std::string();
  });
  r.check("e_unitary_inverse(I) = mu^(e)* on n <= " + lim(L),
          [&] { return compare(e_unitary_inverse(I), TabulatedFunction::of(mu_e_star, L)); });
  r.check("h(p^a) = 0 for 1 <= a <= 5 and h(p^6) = 2, p <= 100", [] {
    const std::array<unsigned, 2> num{1, 2};
    const std::array<unsigned, 1> den{4};
    for (std::uint64_t p : primes_up_to(100)) {
      const auto h = series_divide_zeta_shape(local_series(tau_e_star, p, 12), num, den);
      for (unsigned a = 1; a <= 5; ++a)
        if (*h.coefficient(a) != 0) return "p = " + std::to_string(p);
      if (*h.coefficient(6) != 2) return "p = " + std::to_string(p);
    }
    return std::string();
  });
  r.check("w(p^a) = 0 for 1 <= a <= 3 and w(p^4) = -1, p <= 100", [] {
    const std::array<unsigned, 1> num{1};
    const std::array<unsigned, 2> den{2, 2};
    for (std::uint64_t p : primes_up_to(100)) {
      const auto w = series_divide_zeta_shape(local_series(mu_e_star, p, 12), num, den);
      for (unsigned a = 1; a <= 3; ++a)
        if (*w.coefficient(a) != 0) return "p = " + std::to_string(p);
      if (*w.coefficient(4) != -1) return "p = " + std::to_string(p);
    }
    return std::string();
  });
  r.check("v equals the local factor of l_4 2^omega over zeta(4s)^2", [] {
    std::vector<ExactRational> l4(17, 2);
    l4[0] = 1;
    l4[1] = l4[2] = l4[3] = 0;
    const std::array<unsigned, 2> twice_four{4, 4};
    for (std::uint64_t p : {2, 3, 5, 7})
      if (!(series_divide_zeta_shape(LocalSeries(p, l4), twice_four, {}) == v_coefficients(p, 16)))
        return "p = " + std::to_string(p);
    return std::string();
  });
  r.check("l_4 identity on n <= " + lim(10 * L), [&] {
    for (std::uint64_t n = 1; n <= 10 * L; ++n)
      if (!verify_l4_identity(WideNat{n})) return at(n);
    return std::string();
  });
  return r.take();
}

// #{d | n with the same prime support and every b_i coprime to a_i}.
SignedWide phi_e_by_counting(const Factorization& f) {
  SignedWide c = 0;
  for (WideNat d : enumerate(f, DivisorKind::all)) {
    const auto fd = factor(d);
    bool ok = fd.size() == f.size();
    for (std::size_t i = 0; i < f.size(); ++i) ok = ok && std::gcd(fd.parts()[i].exponent, f.parts()[i].exponent) == 1;
    c += ok;
  }
  return c;
}

bool subset(const std::vector<WideNat>& a, const std::vector<WideNat>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<CheckResult> oracles(std::uint64_t L) {
  Runner r;
  for (auto id : {tau_star, sigma_star, tau_e, sigma_e, tau_e_star, sigma_e_star})
    r.check(std::string(name(id)) + " closed form = divisor sum on n <= " + lim(L), [&] {
      return sweep(L, [&](std::uint64_t, const Factorization& f) { return eval(id, f) == eval_bruteforce_by_divisors(id, f); });
    });
  r.check("phi_star closed form = unitary-gcd count on n <= " + lim(L), [&] {
    return sweep(L, [](std::uint64_t n, const Factorization& f) {
      return static_cast<WideNat>(eval(phi_star, f)) == phi_star_bruteforce(n);
    });
  });
  r.check("phi_e closed form = coprime-exponent count on n <= " + lim(L), [&] {
    return sweep(L, [](std::uint64_t, const Factorization& f) { return eval(phi_e, f) == phi_e_by_counting(f); });
  });
  r.check("phi_e_star closed form = exponent-tuple count on n <= " + lim(10 * L), [&] {
    return sweep(10 * L, [](std::uint64_t, const Factorization& f) {
      return static_cast<WideNat>(eval(phi_e_star, f)) == phi_e_star_bruteforce(f);
    });
  });
  r.check("divisor sets nest: e-unitary in exponential in all, unitary in all, n <= " + lim(10 * L), [&] {
    return sweep(10 * L, [](std::uint64_t, const Factorization& f) {
      const auto all = enumerate(f, DivisorKind::all);
      const auto ex = enumerate(f, DivisorKind::exponential);
      return subset(enumerate(f, DivisorKind::exp_unitary), ex) && subset(ex, all) &&
             subset(enumerate(f, DivisorKind::unitary), all);
    });
  });
  r.check("e-squarefree n: e-unitary and exponential systems coincide, n <= " + lim(10 * L), [&] {
    return sweep(10 * L, [](std::uint64_t, const Factorization& f) {
      if (!classify(f).e_squarefree) return true;
      return enumerate(f, DivisorKind::exp_unitary) == enumerate(f, DivisorKind::exponential) &&
             eval(tau_e_star, f) == eval(tau_e, f) && eval(sigma_e_star, f) == eval(sigma_e, f) &&
             eval(mu_e_star, f) == eval(mu_e, f);
    });
  });
  return r.take();
}

std::vector<CheckResult> paper_values(std::uint64_t L, unsigned threads) {
  Runner r;
  const auto yes = [](bool b) { return b ? std::string() : std::string("mismatch"); };
  r.check("sigma^(e)*(2^12) = 4122", [&] { return yes(eval(sigma_e_star, factor(4096)) == 4122); });
  r.check("e-unitary divisors of 2^12 are 2, 8, 16, 4096", [&] {
    return yes(enumerate(factor(4096), DivisorKind::exp_unitary) == std::vector<WideNat>{2, 8, 16, 4096});
  });
  r.check("sigma^(e)(36) = sigma^(e)*(36) = 72",
          [&] { return yes(eval(sigma_e, factor(36)) == 72 && eval(sigma_e_star, factor(36)) == 72); });
  r.check("36, 1800 and 2700 are e-unitary perfect", [&] {
    for (std::uint64_t n : {36, 1800, 2700})
      if (!is_perfect(PerfectKind::e_unitary, factor(n))) return at(n);
    return std::string();
  });
  r.check("17424 is e-perfect and not e-unitary perfect", [&] {
    const auto f = factor(17424);
    return yes(is_perfect(PerfectKind::e_perfect, f) && !is_perfect(PerfectKind::e_unitary, f));
  });
  r.check("unitary perfect numbers up to 10^5 are 6, 60, 90, 87360", [&] {
    std::vector<WideNat> got;
    for (const auto& rec : search(PerfectKind::unitary, 100000, {}, {threads, 1})) got.push_back(rec.n.value());
    return yes(got == std::vector<WideNat>{6, 60, 90, 87360});
  });
  r.check("146361946186458562560000 is unitary perfect",
          [&] { return yes(is_perfect(PerfectKind::unitary, factor(parse_wide("146361946186458562560000")))); });
  r.check("squarefull e-perfect numbers up to " + lim(L) + " are the listed kernels", [&] {
    static const std::vector<WideNat> listed{36, 1800, 2700, 17424, 1306800, 4769856, 238492800, 357739200};
    SearchFilter powerful;
    powerful.powerful_only = true;
    std::vector<WideNat> got, expected;
    for (const auto& rec : search(PerfectKind::e_perfect, L, powerful, {threads, 1})) got.push_back(rec.n.value());
    for (WideNat n : listed)
      if (n <= L) expected.push_back(n);
    return yes(got == expected);
  });
  r.check("no odd e-unitary perfect number up to " + lim(L), [&] {
    SearchFilter odd;
    odd.odd_only = true;
    return yes(search(PerfectKind::e_unitary, L, odd, {threads, 1}).empty());
  });
  r.check("sigma^(e)*(p^a) even for odd p <= 1000, 2 <= a <= 30", [] {
    for (std::uint64_t p : primes_up_to(1000))
      for (std::uint32_t a = 2; p > 2 && a <= 30; ++a)
        if (prime_power_value_big(sigma_e_star, p, a) % 2 != 0) return "p = " + std::to_string(p);
    return std::string();
  });
  r.check("L(m) = log phi*(m) / m is maximal at m = 5 with L(5) = (log 4)/5", [] {
    const auto t = l_table(ExponentFunction::phi_star, 64);
    return t.argmax == 5 && t.entries[4].f == 4 ? std::string() : std::string("argmax " + std::to_string(t.argmax));
  });
  return r.take();
}

unsigned checkpoint_count(std::uint64_t x) {
  unsigned bits = 0;
  while ((x >> bits) > 1) ++bits;
  return std::max(3u, bits > 9 ? bits - 9 : 0u);
}

std::vector<CheckResult> residuals(std::uint64_t L, unsigned threads) {
  Runner r;
  const SummatoryOptions opt{threads};
  const unsigned cps = checkpoint_count(L);
  auto envelope_check = [&](const std::function<SummatoryReport()>& run) {
    return [&, run] {
      const auto report = run();
      const auto env = residual_envelope(report, report.model.normalization_exponent);
      return bounded_non_trending(env, std::min<std::size_t>(5, env.size() / 2)) ? std::string()
                                                                               : std::string("trending or unbounded");
    };
  };
  for (auto id : {tau_e_star, mu_e_star, phi_e_star})
    r.check(std::string(name(id)) + " residual bounded and non-trending up to " + lim(L),
            envelope_check([&, id] { return summatory(id, L, cps, opt); }));
  for (auto [num, den] : {std::pair{tau_e_star, tau_e}, {sigma_e_star, sigma_e}, {phi_e, phi_e_star}})
    r.check(std::string(name(num)) + "/" + std::string(name(den)) + " residual bounded and non-trending up to " +
                lim(L),
            envelope_check([&, num, den] { return quotient_summatory(num, den, L, cps, opt); }));
  return r.take();
}

}  // namespace

std::string_view name(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::algebra: return "algebra";
    case VerifySuite::oracles: return "oracles";
    case VerifySuite::paper_values: return "paper-values";
    case VerifySuite::residuals: return "residuals";
  }
  return "?";
}

VerifySuite parse_verify_suite(std::string_view text) {
  for (auto s : {VerifySuite::algebra, VerifySuite::oracles, VerifySuite::paper_values, VerifySuite::residuals})
    if (text == name(s)) return s;
  throw DomainError("unknown verify suite '" + std::string(text) + "'");
}

std::uint64_t default_limit(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::algebra:
    case VerifySuite::oracles: return 10000;
    case VerifySuite::paper_values: return 1'000'000'000;
    case VerifySuite::residuals: return 1'000'000;
  }
  return 0;
}

std::vector<CheckResult> run_suite(VerifySuite suite, const VerifyOptions& options) {
  const std::uint64_t L = options.limit ? options.limit : default_limit(suite);
  switch (suite) {
    case VerifySuite::algebra: return algebra(L);
    case VerifySuite::oracles: return oracles(L);
    case VerifySuite::paper_values: return paper_values(L, options.threads);
    case VerifySuite::residuals: return residuals(L, options.threads);
  }
  return {};
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& c : results) {
    out += (c.pass ? "PASS " : "FAIL ") + c.claim;
    if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& c) { return c.pass; });
}

bool bounded_non_trending(const std::vector<std::pair<std::uint64_t, double>>& envelope, std::size_t tail) {
  if (tail == 0 || envelope.size() <= tail) return false;
  double head_max = 0, tail_max = 0;
  for (std::size_t i = 0; i < envelope.size(); ++i) {
    const double v = envelope[i].second;
    if (!std::isfinite(v)) return false;
    double& m = i + tail < envelope.size() ? head_max : tail_max;
    m = std::max(m, v);
  }
  bool increasing = true;
  for (std::size_t i = envelope.size() - tail + 1; i < envelope.size(); ++i)
    increasing = increasing && envelope[i].second > envelope[i - 1].second;
  return tail_max <= 2 * head_max && !increasing;
}

}  // namespace exdiv
