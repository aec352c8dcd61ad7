#include "exdiv/arithfun.hpp"

#include <optional>
#include <string>
#include <vector>

#include "exdiv/divisors.hpp"
#include "exdiv/smallint.hpp"

namespace exdiv {

namespace {

constexpr std::array<std::string_view, kAllFunctions.size()> kNames = {
    "tau",          "sigma",          "omega",          "mu",         "phi",         "tau_star",
    "sigma_star",   "mu_star",        "phi_star",       "tau_e",      "sigma_e",     "mu_e",
    "phi_e",        "tau_e_star",     "sigma_e_star",   "mu_e_star",  "phi_e_star",  "t_e",
    "chi_squarefree", "chi_squarefull", "chi_e_squarefree", "chi_4_full",
};

// Facts about an exponent a, tabulated because every evaluation needs them.
struct ExponentFacts {
  std::uint64_t tau = 0;
  std::uint32_t omega = 0;
  int mu = 0;
  std::uint64_t phi = 0;
  std::uint64_t phi_star = 0;
  std::vector<std::uint64_t> divisors;
  std::vector<std::uint64_t> unitary_divisors;
  std::uint64_t squarefree_divisors = 0;  // counted directly, not as 2^omega
};

ExponentFacts compute_facts(std::uint64_t a) {
  ExponentFacts f{small::tau(a),      small::omega(a),   small::mu(a), small::phi(a),
                  small::phi_star(a), small::divisors(a), small::unitary_divisors(a)};
  for (std::uint64_t d : f.divisors)
    if (small::is_squarefree(d)) ++f.squarefree_divisors;
  return f;
}

constexpr std::uint32_t kTabulated = 256;

const std::vector<ExponentFacts> kFactsTable = [] {
  std::vector<ExponentFacts> t(kTabulated);
  for (std::uint32_t i = 1; i < kTabulated; ++i) t[i] = compute_facts(i);
  return t;
}();

const ExponentFacts& facts(std::uint32_t a, std::optional<ExponentFacts>& scratch) {
  if (a < kTabulated) return kFactsTable[a];
  return scratch.emplace(compute_facts(a));
}

SignedWide sum_of_powers(WideNat p, const std::vector<std::uint64_t>& exps) {
  WideNat s = 0;
  for (std::uint64_t d : exps) s = checked_add(s, checked_pow(p, d));
  return to_signed(s);
}


}  // namespace

std::string_view name(FunctionId id) { return kNames[static_cast<std::size_t>(id)]; }

FunctionId parse_function_id(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == text) return kAllFunctions[i];
  throw DomainError("unknown function '" + std::string(text) + "'");
}

SignedWide prime_power_value(FunctionId id, WideNat p, std::uint32_t a) {
  if (a == 0) return 1;
  std::optional<ExponentFacts> scratch;
  switch (id) {
    case FunctionId::tau: return SignedWide{a} + 1;
    case FunctionId::sigma: {
      WideNat s = 0, pk = 1;
      for (std::uint32_t k = 0; k <= a; ++k) {
        s = checked_add(s, pk);
        if (k < a) pk = checked_mul(pk, p);
      }
      return to_signed(s);
    }
    case FunctionId::omega: return 1;
    case FunctionId::mu: return a == 1 ? -1 : 0;
    case FunctionId::phi: return to_signed(checked_mul(checked_pow(p, a - 1), p - 1));
    case FunctionId::tau_star: return 2;
    case FunctionId::sigma_star: return to_signed(checked_add(checked_pow(p, a), 1));
    case FunctionId::mu_star: return -1;
    case FunctionId::phi_star: return to_signed(checked_pow(p, a) - 1);
    case FunctionId::tau_e: return static_cast<SignedWide>(facts(a, scratch).tau);
    case FunctionId::sigma_e: return sum_of_powers(p, facts(a, scratch).divisors);
    case FunctionId::mu_e: return facts(a, scratch).mu;
    case FunctionId::phi_e: return static_cast<SignedWide>(facts(a, scratch).phi);
    case FunctionId::tau_e_star: return SignedWide{1} << facts(a, scratch).omega;
    case FunctionId::sigma_e_star: return sum_of_powers(p, facts(a, scratch).unitary_divisors);
    case FunctionId::mu_e_star: return facts(a, scratch).omega % 2 == 0 ? 1 : -1;
    case FunctionId::phi_e_star: return static_cast<SignedWide>(facts(a, scratch).phi_star);
    // The count of e-squarefree e-divisors of p^a, from its definition.
    case FunctionId::t_e: return static_cast<SignedWide>(facts(a, scratch).squarefree_divisors);
    case FunctionId::chi_squarefree: return a == 1 ? 1 : 0;
    case FunctionId::chi_squarefull: return a >= 2 ? 1 : 0;
    case FunctionId::chi_e_squarefree: return facts(a, scratch).mu != 0 ? 1 : 0;
    case FunctionId::chi_4_full: return a >= 4 ? 1 : 0;
  }
  throw DomainError("unhandled function id");
}

BigInt prime_power_value_big(FunctionId id, WideNat p, std::uint32_t a) {
  if (a == 0) return 1;
  const BigInt bp = to_big(p);
  auto power = [&](std::uint64_t k) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), bp.get_mpz_t(), k);
    return r;
  };
  auto sum_powers = [&](const std::vector<std::uint64_t>& exps) {
    BigInt s = 0;
    for (std::uint64_t d : exps) s += power(d);
    return s;
  };
  std::optional<ExponentFacts> scratch;
  switch (id) {
    case FunctionId::sigma: {
      std::vector<std::uint64_t> all(a + 1);
      for (std::uint32_t k = 0; k <= a; ++k) all[k] = k;
      return sum_powers(all);
    }
    case FunctionId::phi: return power(a - 1) * (bp - 1);
    case FunctionId::sigma_star: return power(a) + 1;
    case FunctionId::phi_star: return power(a) - 1;
    case FunctionId::sigma_e: return sum_powers(facts(a, scratch).divisors);
    case FunctionId::sigma_e_star: return sum_powers(facts(a, scratch).unitary_divisors);
    default: return to_big(prime_power_value(id, p, a));
  }
}

SignedWide eval(FunctionId id, FactorView f) {
  if (id == FunctionId::omega) return static_cast<SignedWide>(f.size());
  SignedWide v = 1;
  for (const auto& [p, a] : f) {
    v = checked_mul(v, prime_power_value(id, p, a));
    if (v == 0) return 0;
  }
  return v;
}

WideNat phi_star_bruteforce(WideNat n) {
  if (n == 0) throw DomainError("phi_star_bruteforce: n must be positive");
  if (n > kBruteforceGuard) throw CapacityError("phi_star_bruteforce: n exceeds 10^6 oracle guard");
  const Factorization fn = factor(n);
  WideNat c = 0;
  for (WideNat k = 1; k <= n; ++k)
    if (unitary_gcd(k, fn) == 1) ++c;
  return c;
}

WideNat phi_e_star_bruteforce(FactorView f) {
  WideNat space = 1;
  for (const auto& pp : f) {
    space *= pp.exponent;
    if (space > kBruteforceGuard) throw CapacityError("phi_e_star_bruteforce: exponent tuple space exceeds 10^6");
  }
  // Exponent tuples (b_1, ..., b_r), 1 <= b_i <= a_i, walked as an odometer.
  std::vector<Factorization> exponent_factorizations;
  for (const auto& pp : f) exponent_factorizations.push_back(factor(pp.exponent));
  std::vector<std::uint32_t> b(f.size(), 1);
  WideNat c = 0;
  for (;;) {
    bool admissible = true;
    for (std::size_t i = 0; i < f.size() && admissible; ++i)
      admissible = unitary_gcd(b[i], exponent_factorizations[i]) == 1;
    if (admissible) ++c;
    std::size_t i = 0;
    while (i < f.size() && b[i] == f[i].exponent) b[i++] = 1;
    if (i == f.size()) break;
    ++b[i];
  }
  return c;
}

SignedWide eval_bruteforce_by_divisors(FunctionId id, FactorView f) {
  DivisorKind kind;
  bool sum_values;
  switch (id) {
    case FunctionId::tau: kind = DivisorKind::all; sum_values = false; break;
    case FunctionId::sigma: kind = DivisorKind::all; sum_values = true; break;
    case FunctionId::tau_star: kind = DivisorKind::unitary; sum_values = false; break;
    case FunctionId::sigma_star: kind = DivisorKind::unitary; sum_values = true; break;
    case FunctionId::tau_e: kind = DivisorKind::exponential; sum_values = false; break;
    case FunctionId::sigma_e: kind = DivisorKind::exponential; sum_values = true; break;
    case FunctionId::tau_e_star: kind = DivisorKind::exp_unitary; sum_values = false; break;
    case FunctionId::sigma_e_star: kind = DivisorKind::exp_unitary; sum_values = true; break;
    default:
      throw DomainError("eval_bruteforce_by_divisors: '" + std::string(name(id)) + "' is not a divisor sum");
  }
  const auto ds = enumerate(f, kind);
  if (!sum_values) return static_cast<SignedWide>(ds.size());
  WideNat s = 0;
  for (WideNat d : ds) s = checked_add(s, d);
  return to_signed(s);
}

}  // namespace exdiv
