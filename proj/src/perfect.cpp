#include "exdiv/perfect.hpp"

#include <algorithm>

#include "exdiv/parallel.hpp"
#include "exdiv/smallint.hpp"
#include "exdiv/summatory.hpp"

namespace exdiv {

namespace {

// n = a^2 b^3 with b squarefree; every squarefull n has exactly one such form.
struct PowerfulEntry {
  std::uint64_t value;
  std::uint32_t a, b;
};

struct PowerfulTable {
  std::vector<PowerfulEntry> entries;  // ascending by value
  std::vector<std::uint32_t> spf;      // smallest prime factor up to sqrt(limit)
};

PowerfulTable powerful_table(std::uint64_t limit) {
  if (limit > kPowerfulGuard) throw CapacityError("powerful numbers: limit exceeds 10^12");
  PowerfulTable t;
  if (limit == 0) return t;
  const auto amax = static_cast<std::uint64_t>(isqrt(limit));
  t.spf.assign(amax + 1, 0);
  for (std::uint64_t i = 2; i <= amax; ++i)
    if (t.spf[i] == 0)
      for (std::uint64_t j = i; j <= amax; j += i)
        if (t.spf[j] == 0) t.spf[j] = static_cast<std::uint32_t>(i);
  for (std::uint64_t b = 1; b * b * b <= limit; ++b) {
    if (!small::is_squarefree(b)) continue;
    const std::uint64_t b3 = b * b * b;
    for (std::uint64_t a = 1; a * a <= limit / b3; ++a)
      t.entries.push_back({a * a * b3, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
  return t;
}

// Writes the factorization of a^2 b^3 into parts; returns the part count.
std::size_t factor_entry(const PowerfulEntry& e, const std::vector<std::uint32_t>& spf, PrimePower* parts) {
  std::size_t size = 0;
  auto add = [&](std::uint32_t m, std::uint32_t weight) {
    while (m > 1) {
      const std::uint32_t p = spf[m];
      std::uint32_t k = 0;
      while (m % p == 0) m /= p, ++k;
      std::size_t i = 0;
      while (i < size && parts[i].prime < p) ++i;
      if (i < size && parts[i].prime == p) {
        parts[i].exponent += weight * k;
      } else {
        std::copy_backward(parts + i, parts + size, parts + size + 1);
        parts[i] = {p, weight * k};
        ++size;
      }
    }
  };
  add(e.a, 2);
  add(e.b, 3);
  return size;
}

// 2 * 3 * ... * 37 > 10^12.
constexpr std::size_t kMaxParts = 12;

bool passes(const SearchFilter& filter, std::uint64_t n, FactorView f) {
  if (filter.odd_only && n % 2 == 0) return false;
  if (filter.coprime_to && gcd(WideNat{n}, *filter.coprime_to) != 1) return false;
  const Classification c = classify(f);
  if (filter.require_non_e_squarefree && c.e_squarefree) return false;
  if (filter.powerful_only && !c.squarefull) return false;
  return true;
}

// nullopt when sigma overflows.
std::optional<SearchRecord> test_candidate(PerfectKind kind, FactorView f) {
  try {
    if (!is_perfect(kind, f)) return std::nullopt;
    return SearchRecord{Factorization::trusted({f.begin(), f.end()}), kind, classify(f).e_squarefree, false};
  } catch (const OverflowError&) {
    return SearchRecord{Factorization::trusted({f.begin(), f.end()}), kind, classify(f).e_squarefree, true};
  }
}

}  // namespace

std::string_view name(PerfectKind kind) {
  switch (kind) {
    case PerfectKind::unitary: return "unitary-perfect";
    case PerfectKind::e_perfect: return "e-perfect";
    case PerfectKind::e_unitary: return "e-unitary-perfect";
  }
  return "?";
}

PerfectKind parse_perfect_kind(std::string_view text) {
  for (PerfectKind k : {PerfectKind::unitary, PerfectKind::e_perfect, PerfectKind::e_unitary})
    if (text == name(k)) return k;
  if (text == "unitary") return PerfectKind::unitary;
  if (text == "e_perfect") return PerfectKind::e_perfect;
  if (text == "e_unitary" || text == "e-unitary") return PerfectKind::e_unitary;
  throw DomainError("unknown perfect kind '" + std::string(text) + "'");
}

FunctionId sigma_of(PerfectKind kind) {
  switch (kind) {
    case PerfectKind::unitary: return FunctionId::sigma_star;
    case PerfectKind::e_perfect: return FunctionId::sigma_e;
    case PerfectKind::e_unitary: return FunctionId::sigma_e_star;
  }
  throw DomainError("unhandled perfect kind");
}

void for_each_powerful(std::uint64_t limit, const std::function<void(std::uint64_t, FactorView)>& visit) {
  const PowerfulTable t = powerful_table(limit);
  PrimePower parts[kMaxParts];
  for (const auto& e : t.entries) visit(e.value, FactorView(parts, factor_entry(e, t.spf, parts)));
}

std::vector<Factorization> powerful_numbers(std::uint64_t limit) {
  std::vector<Factorization> out;
  for_each_powerful(limit, [&](std::uint64_t, FactorView f) { out.push_back(Factorization::trusted({f.begin(), f.end()})); });
  return out;
}

bool is_perfect(PerfectKind kind, FactorView n) {
  const SignedWide s = eval(sigma_of(kind), n);
  return s == to_signed(checked_mul(value_of(n), WideNat{2}));
}

KernelVerdict reduce_to_powerful_kernel(FactorView n, PerfectKind kind) {
  if (kind == PerfectKind::unitary) throw DomainError("reduce_to_powerful_kernel: only for the exponential kinds");
  auto [kernel, rest] = powerful_split(n);
  const bool holds = is_perfect(kind, kernel);
  return {std::move(kernel), holds};
}

std::vector<SearchRecord> search(PerfectKind kind, std::uint64_t limit, const SearchFilter& filter,
                                 const SearchOptions& options) {
  std::vector<std::vector<SearchRecord>> per_unit;
  const std::uint64_t from = std::max<std::uint64_t>(options.from, 1);
  if (kind == PerfectKind::unitary) {
    if (limit > kUnitarySearchGuard) throw CapacityError("search: unitary scans stop at 10^7");
    const std::uint64_t unit = kDefaultSegment;
    const std::size_t count = limit < from ? 0 : (limit - from) / unit + 1;
    per_unit.resize(count);
    run_units(count, options.threads, [&](std::size_t u) {
      const std::uint64_t lo = from + u * unit, hi = std::min(limit, lo + unit - 1);
      sieve_factorizations(lo, hi, [&](std::uint64_t n, FactorView f) {
        if (!passes(filter, n, f)) return;
        if (auto r = test_candidate(kind, f)) per_unit[u].push_back(std::move(*r));
      });
    });
  } else {
    if (limit > kExponentialSearchGuard) throw CapacityError("search: exponential kinds stop at 10^10");
    const PowerfulTable t = powerful_table(limit);
    constexpr std::size_t unit = 8192;
    const std::size_t count = (t.entries.size() + unit - 1) / unit;
    per_unit.resize(count);
    run_units(count, options.threads, [&](std::size_t u) {
      PrimePower parts[kMaxParts];
      for (std::size_t i = u * unit; i < std::min(t.entries.size(), (u + 1) * unit); ++i) {
        const auto& e = t.entries[i];
        if (e.value < from) continue;
        const FactorView f(parts, factor_entry(e, t.spf, parts));
        if (!passes(filter, e.value, f)) continue;
        if (auto r = test_candidate(kind, f)) per_unit[u].push_back(std::move(*r));
      }
    });
  }
  std::vector<SearchRecord> out;
  for (auto& v : per_unit) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

std::string to_csv(const std::vector<SearchRecord>& records) {
  std::string out = "n,factorization,kind,e_squarefree\n";
  for (const auto& r : records) {
    out += to_string(r.n.value()) + "," + to_text(r.n) + "," + std::string(name(r.kind));
    if (r.indeterminate) out += " (indeterminate: sigma overflows)";
    out += r.e_squarefree ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace exdiv
