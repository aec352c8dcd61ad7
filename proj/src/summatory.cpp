#include "exdiv/summatory.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <unordered_map>

#include "exdiv/constants.hpp"
#include "exdiv/parallel.hpp"

namespace exdiv {

namespace {

// 2 * 3 * ... * 29 > 10^9, so no n below the guard has ten distinct primes.
constexpr std::size_t kMaxParts = 10;

const std::vector<std::uint32_t>& base_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(isqrt(kSieveGuard)) + 1))
      out.push_back(static_cast<std::uint32_t>(p));
    return out;
  }();
  return primes;
}

struct SegmentBuffers {
  std::vector<std::uint32_t> found;  // product of the prime powers found so far
  std::vector<std::uint8_t> count;
  std::vector<std::uint32_t> primes;  // kMaxParts slots per n
  std::vector<std::uint8_t> exponents;

  void reset(std::size_t len) {
    if (found.size() < len) {
      found.resize(len);
      count.resize(len);
      primes.resize(len * kMaxParts);
      exponents.resize(len * kMaxParts);
    }
    std::fill_n(found.begin(), len, 1U);
    std::fill_n(count.begin(), len, std::uint8_t{0});
  }
};

void sieve_segment(std::uint64_t s, std::uint64_t e, SegmentBuffers& buf, const SieveVisitor& visit) {
  const std::size_t len = e - s + 1;
  buf.reset(len);
  for (std::uint32_t p32 : base_primes()) {
    const std::uint64_t p = p32;
    if (p * p > e) break;
    for (std::uint64_t m = (s + p - 1) / p * p; m <= e; m += p) {
      const std::size_t i = m - s;
      const std::size_t slot = i * kMaxParts + buf.count[i]++;
      buf.primes[slot] = p32;
      buf.exponents[slot] = 1;
      buf.found[i] *= p32;
    }
    for (std::uint64_t pk = p * p; pk <= e; pk *= p) {
      for (std::uint64_t m = (s + pk - 1) / pk * pk; m <= e; m += pk) {
        const std::size_t i = m - s;
        ++buf.exponents[i * kMaxParts + buf.count[i] - 1];
        buf.found[i] *= p32;
      }
    }
  }
  PrimePower parts[kMaxParts];
  for (std::size_t i = 0; i < len; ++i) {
    const auto n = static_cast<std::uint32_t>(s + i);
    const std::size_t c = buf.count[i];
    for (std::size_t j = 0; j < c; ++j) parts[j] = {buf.primes[i * kMaxParts + j], buf.exponents[i * kMaxParts + j]};
    // What remains has no prime factor up to sqrt(e), so it is 1 or a prime.
    const std::uint32_t rest = n / buf.found[i];
    std::size_t size = c;
    if (rest > 1) parts[size++] = {rest, 1};
    visit(s + i, FactorView(parts, size));
  }
}

void check_range(std::uint64_t x, std::uint64_t guard) {
  if (x == 0) throw DomainError("summatory: x must be at least 1");
  if (x > guard) throw CapacityError("summatory: x = " + std::to_string(x) + " exceeds the guard " + std::to_string(guard));
}

struct Unit {
  std::uint64_t lo, hi;
  std::size_t interval;  // index of the checkpoint closing this unit's interval
};

std::vector<Unit> make_units(const std::vector<std::uint64_t>& checkpoints, std::uint64_t segment) {
  std::vector<Unit> units;
  std::uint64_t lo = 1;
  for (std::size_t j = 0; j < checkpoints.size(); ++j) {
    for (; lo <= checkpoints[j]; lo += segment) units.push_back({lo, std::min(checkpoints[j], lo + segment - 1), j});
    lo = checkpoints[j] + 1;
  }
  return units;
}

double constant_value(ConstantId id) {
  static std::mutex mutex;
  static std::map<ConstantId, double> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, euler_product(id, 100000, 32).value).first;
  return it->second;
}

template <typename Partial>
SummatoryReport assemble(std::string function, MainTermModel model, const std::vector<std::uint64_t>& checkpoints,
                         const std::vector<Unit>& units, const std::vector<Partial>& partials) {
  SummatoryReport report{std::move(function), std::move(model), {}};
  ExactRational running = 0;
  for (std::size_t u = 0; u < units.size(); ++u) {
    running += ExactRational(partials[u]);
    if (u + 1 == units.size() || units[u + 1].interval != units[u].interval) {
      const std::uint64_t x = checkpoints[units[u].interval];
      const double main = report.model(static_cast<double>(x));
      const double residual = running.get_d() - main;
      report.checkpoints.push_back(
          {x, running, main, residual,
           std::fabs(residual) / std::pow(static_cast<double>(x), report.model.normalization_exponent)});
    }
  }
  return report;
}

}  // namespace

void sieve_factorizations(std::uint64_t lo, std::uint64_t hi, const SieveVisitor& visit, std::uint64_t segment) {
  if (hi > kSieveGuard) throw CapacityError("sieve_factorizations: hi exceeds 10^9");
  if (segment == 0) throw DomainError("sieve_factorizations: segment must be positive");
  if (lo == 0) lo = 1;
  thread_local SegmentBuffers buf;
  for (std::uint64_t s = lo; s <= hi; s += segment) sieve_segment(s, std::min(hi, s + segment - 1), buf, visit);
}

double MainTermModel::operator()(double x) const {
  double v = 0;
  for (const auto& [c, e] : terms) v += c * std::pow(x, e);
  return v;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t x, unsigned count) {
  if (x == 0 || count == 0) throw DomainError("geometric_checkpoints: x and count must be positive");
  std::vector<std::uint64_t> out;
  for (unsigned j = count; j-- > 0;) {
    const std::uint64_t c = j >= 64 ? 0 : x >> j;
    if (c >= 1 && (out.empty() || out.back() != c)) out.push_back(c);
  }
  return out;
}

MainTermModel main_term_for(FunctionId id) {
  using enum FunctionId;
  switch (id) {
    case tau_e_star:
    case t_e:
      return {"C1*x + C2*x^(1/2)", {{constant_value(ConstantId::C1), 1.0}, {constant_value(ConstantId::C2), 0.5}}, 0.3};
    case mu_e_star: return {"C3*x", {{constant_value(ConstantId::C3), 1.0}}, 0.55};
    case phi_e_star:
      return {"C4*x + C5*x^(1/3)",
              {{constant_value(ConstantId::C4), 1.0}, {constant_value(ConstantId::C5), 1.0 / 3}},
              0.3};
    default: return {};
  }
}

MainTermModel main_term_for_quotient(FunctionId numerator, FunctionId denominator) {
  using enum FunctionId;
  if (numerator == tau_e_star && denominator == tau_e) return {"T5_TAU*x", {{constant_value(ConstantId::T5_TAU), 1.0}}, 0.3};
  if (numerator == sigma_e_star && denominator == sigma_e)
    return {"T5_SIGMA*x", {{constant_value(ConstantId::T5_SIGMA), 1.0}}, 0.3};
  if (numerator == phi_e && denominator == phi_e_star) return {"T5_PHI*x", {{constant_value(ConstantId::T5_PHI), 1.0}}, 0.3};
  return {};
}

SummatoryReport summatory_of(std::string name, const std::function<SignedWide(std::uint64_t, FactorView)>& f,
                             std::uint64_t x, unsigned checkpoints, MainTermModel model,
                             const SummatoryOptions& options) {
  check_range(x, kSieveGuard);
  const auto cps = geometric_checkpoints(x, checkpoints);
  const auto units = make_units(cps, options.segment);
  std::vector<SignedWide> partials(units.size(), 0);
  run_units(units.size(), options.threads, [&](std::size_t u) {
    SignedWide acc = 0;
    sieve_factorizations(units[u].lo, units[u].hi, [&](std::uint64_t n, FactorView fn) { acc = checked_add(acc, f(n, fn)); },
                         options.segment);
    partials[u] = acc;
  });
  std::vector<BigInt> big(partials.size());
  for (std::size_t u = 0; u < partials.size(); ++u) big[u] = to_big(partials[u]);
  return assemble(std::move(name), std::move(model), cps, units, big);
}

SummatoryReport summatory(FunctionId id, std::uint64_t x, unsigned checkpoints, const SummatoryOptions& options) {
  check_range(x, is_sigma_type(id) ? kSigmaSumGuard : kSieveGuard);
  return summatory_of(
      std::string(name(id)), [id](std::uint64_t, FactorView f) { return eval(id, f); }, x, checkpoints,
      main_term_for(id), options);
}

SummatoryReport quotient_summatory(FunctionId numerator, FunctionId denominator, std::uint64_t x,
                                   unsigned checkpoints, const SummatoryOptions& options) {
  if (!is_multiplicative(numerator) || !is_multiplicative(denominator))
    throw DomainError("quotient_summatory: both functions must be multiplicative");
  check_range(x, kSigmaSumGuard);
  const auto cps = geometric_checkpoints(x, checkpoints);
  const auto units = make_units(cps, options.segment);
  std::vector<ExactRational> partials(units.size());
  run_units(units.size(), options.threads, [&](std::size_t u) {
    // Group n by the product of its prime powers where the local ratio is not 1.
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    sieve_factorizations(
        units[u].lo, units[u].hi,
        [&](std::uint64_t n, FactorView f) {
          std::uint64_t key = 1;
          for (const auto& [p, a] : f) {
            const SignedWide den = prime_power_value(denominator, p, a);
            if (den == 0)
              throw DomainError("quotient_summatory: " + std::string(name(denominator)) + " vanishes at n = " +
                                std::to_string(n));
            if (prime_power_value(numerator, p, a) != den) key *= static_cast<std::uint64_t>(checked_pow(p, a));
          }
          ++counts[key];
        },
        options.segment);
    std::map<std::uint64_t, std::uint64_t> ordered(counts.begin(), counts.end());
    ExactRational acc = 0;
    for (const auto& [key, count] : ordered) {
      const Factorization fk = factor(key);
      acc += ExactRational(to_big(eval(numerator, fk)) * BigInt(static_cast<unsigned long>(count)),
                           to_big(eval(denominator, fk)));
    }
    acc.canonicalize();
    partials[u] = acc;
  });
  return assemble(std::string(name(numerator)) + "/" + std::string(name(denominator)),
                  main_term_for_quotient(numerator, denominator), cps, units, partials);
}

std::vector<std::pair<std::uint64_t, double>> residual_envelope(const SummatoryReport& report, double exponent) {
  if (report.checkpoints.size() < 3) throw DomainError("residual_envelope: needs at least 3 checkpoints");
  std::vector<std::pair<std::uint64_t, double>> out;
  for (const auto& c : report.checkpoints)
    out.emplace_back(c.x, std::fabs(c.residual) / std::pow(static_cast<double>(c.x), exponent));
  return out;
}

std::string to_csv(const SummatoryReport& report) {
  std::string out = "x,sum,main_term,residual,normalized_residual\n";
  char buf[128];
  for (const auto& c : report.checkpoints) {
    std::snprintf(buf, sizeof buf, ",%.12g,%.12g,%.12g\n", c.main_term, c.residual, c.normalized_residual);
    out += std::to_string(c.x) + "," + to_string(c.sum) + buf;
  }
  return out;
}

}  // namespace exdiv
