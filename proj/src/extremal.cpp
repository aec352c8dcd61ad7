#include "exdiv/extremal.hpp"

#include <cmath>
#include <cstdio>

#include "exdiv/constants.hpp"
#include "exdiv/parallel.hpp"
#include "exdiv/smallint.hpp"
#include "exdiv/summatory.hpp"

namespace exdiv {

namespace {

constexpr unsigned kMaxConstructedPrimes = 10000;

const std::vector<std::uint64_t>& first_primes() {
  // pi(104729) = 10^4
  static const std::vector<std::uint64_t> primes = primes_up_to(104729);
  return primes;
}

std::uint64_t exponent_value(ExponentFunction f, std::uint64_t m) {
  return f == ExponentFunction::phi_star ? small::phi_star(m) : std::uint64_t{1} << small::omega(m);
}

}  // namespace

std::string_view name(ExtremalTarget target) {
  switch (target) {
    case ExtremalTarget::eq11: return "eq11";
    case ExtremalTarget::eq12: return "eq12";
    case ExtremalTarget::eq23: return "eq23";
  }
  return "?";
}

ExtremalTarget parse_extremal_target(std::string_view text) {
  for (auto t : {ExtremalTarget::eq11, ExtremalTarget::eq12, ExtremalTarget::eq23})
    if (text == name(t)) return t;
  throw DomainError("unknown extremal target '" + std::string(text) + "'");
}

double target_limit(ExtremalTarget target) {
  switch (target) {
    case ExtremalTarget::eq11: return 0.5 * std::log(2.0);
    case ExtremalTarget::eq12: return euler_product(ConstantId::SIGMA_LIMIT, 100, 32).value;
    case ExtremalTarget::eq23: return std::log(4.0) / 5;
  }
  return 0;
}

LTable l_table(ExponentFunction f, unsigned m_max) {
  if (m_max < 8) throw DomainError("l_table: m_max must be at least 8");
  LTable t{{}, 1};
  for (unsigned m = 1; m <= m_max; ++m) {
    const std::uint64_t v = exponent_value(f, m);
    t.entries.push_back({m, v, std::log(static_cast<double>(v)) / m});
    if (t.entries.back().L > t.entries[t.argmax - 1].L) t.argmax = m;
  }
  return t;
}

double extremal_ratio(ExtremalTarget target, FactorView n) {
  double log_n = 0, log_f = 0, sigma_over_n = 1;
  for (const auto& [p, a] : n) {
    const double lp = std::log(static_cast<double>(p));
    log_n += a * lp;
    switch (target) {
      case ExtremalTarget::eq11: log_f += small::omega(a) * std::log(2.0); break;
      case ExtremalTarget::eq23: log_f += std::log(static_cast<double>(small::phi_star(a))); break;
      case ExtremalTarget::eq12: {
        // sigma^(e)*(p^a) / p^a = sum over unitary d | a of p^{d - a}
        double s = 0;
        for (std::uint64_t d : small::unitary_divisors(a)) s += std::exp((static_cast<double>(d) - a) * lp);
        sigma_over_n *= s;
        break;
      }
    }
  }
  const double loglog = std::log(log_n);
  if (!(loglog > 0)) throw DomainError("extremal_ratio: needs log log n > 0");
  if (target == ExtremalTarget::eq12) return sigma_over_n / loglog;
  return log_f * loglog / log_n;
}

ChampionRecord constructed_sequence_ratio(ExtremalTarget target, unsigned k) {
  if (k == 0 || k > kMaxConstructedPrimes) throw DomainError("constructed_sequence_ratio: k must be in [1, 10^4]");
  unsigned m = 2;
  if (target == ExtremalTarget::eq11) m = l_table(ExponentFunction::tau_star_of_exponent, 8).argmax;
  if (target == ExtremalTarget::eq23) m = l_table(ExponentFunction::phi_star, 8).argmax;
  std::vector<PrimePower> parts;
  for (unsigned i = 0; i < k; ++i) parts.push_back({first_primes()[i], m});
  ChampionRecord r{Factorization::trusted(std::move(parts)), {}, 0, target_limit(target)};
  r.ratio = extremal_ratio(target, r.n);
  if (auto v = r.n.try_value())
    r.description = to_string(*v);
  else
    r.description = "(2*3*...*" + std::to_string(first_primes()[k - 1]) + ")^" + std::to_string(m);
  return r;
}

std::vector<ChampionRecord> champion_scan(ExtremalTarget target, std::uint64_t x, unsigned threads) {
  if (x > kChampionScanGuard) throw CapacityError("champion_scan: x exceeds 10^8");
  const double limit = target_limit(target);
  std::vector<std::vector<ChampionRecord>> per_unit;
  if (x >= kChampionScanStart) per_unit.resize((x - kChampionScanStart) / kDefaultSegment + 1);
  run_units(per_unit.size(), threads, [&](std::size_t u) {
    const std::uint64_t lo = kChampionScanStart + u * kDefaultSegment, hi = std::min(x, lo + kDefaultSegment - 1);
    double best = -INFINITY;
    sieve_factorizations(lo, hi, [&](std::uint64_t n, FactorView f) {
      const double r = extremal_ratio(target, f);
      if (r > best) {
        best = r;
        per_unit[u].push_back({Factorization::trusted({f.begin(), f.end()}), std::to_string(n), r, limit});
      }
    });
  });
  std::vector<ChampionRecord> out;
  for (auto& unit : per_unit)
    for (auto& rec : unit)
      if (out.empty() || rec.ratio > out.back().ratio) out.push_back(std::move(rec));
  return out;
}

std::string to_csv(const std::vector<ChampionRecord>& records) {
  std::string out = "n_or_description,ratio,target_limit\n";
  char buf[96];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, ",%.12g,%.12g\n", r.ratio, r.target_limit);
    out += r.description + buf;
  }
  return out;
}

}  // namespace exdiv
