#include "exdiv/divisors.hpp"

#include <algorithm>
#include <string>

#include "exdiv/smallint.hpp"

namespace exdiv {

std::string_view name(DivisorKind kind) {
  switch (kind) {
    case DivisorKind::all: return "all";
    case DivisorKind::unitary: return "unitary";
    case DivisorKind::exponential: return "exponential";
    case DivisorKind::exp_unitary: return "exp-unitary";
    case DivisorKind::unitary_exp: return "unitary-exp";
  }
  return "?";
}

DivisorKind parse_divisor_kind(std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), '_', '-');
  for (auto k : {DivisorKind::all, DivisorKind::unitary, DivisorKind::exponential, DivisorKind::exp_unitary,
                 DivisorKind::unitary_exp})
    if (name(k) == t) return k;
  throw DomainError("unknown divisor kind '" + std::string(text) + "'");
}

std::vector<std::uint32_t> admissible_exponents(std::uint32_t a, DivisorKind kind) {
  std::vector<std::uint32_t> out;
  switch (kind) {
    case DivisorKind::all:
      for (std::uint32_t b = 0; b <= a; ++b) out.push_back(b);
      break;
    case DivisorKind::unitary:
      out = {0, a};
      break;
    case DivisorKind::exponential:
      for (auto b : small::divisors(a)) out.push_back(static_cast<std::uint32_t>(b));
      break;
    case DivisorKind::exp_unitary:
      for (auto b : small::unitary_divisors(a)) out.push_back(static_cast<std::uint32_t>(b));
      break;
    case DivisorKind::unitary_exp:
      // 1 <= b < a with gcd(b, a - b) = gcd(b, a) = 1.
      for (std::uint32_t b = 1; b < a; ++b)
        if (small::gcd(b, a) == 1) out.push_back(b);
      break;
  }
  return out;
}

std::vector<WideNat> enumerate(FactorView f, DivisorKind kind) {
  if (f.empty()) return {1};
  if (count(f, kind) > kMaxEnumeratedDivisors) throw CapacityError("divisor set exceeds 2^20 members");
  std::vector<WideNat> ds{1};
  for (const auto& [p, a] : f) {
    const auto exps = admissible_exponents(a, kind);
    std::vector<WideNat> next;
    next.reserve(ds.size() * exps.size());
    for (std::uint32_t b : exps) {
      const WideNat pb = checked_pow(p, b);
      for (WideNat d : ds) next.push_back(checked_mul(d, pb));
    }
    ds = std::move(next);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

WideNat count(FactorView f, DivisorKind kind) {
  WideNat c = 1;
  for (const auto& pp : f) {
    const std::uint32_t a = pp.exponent;
    std::uint64_t local = 0;
    switch (kind) {
      case DivisorKind::all: local = std::uint64_t{a} + 1; break;
      case DivisorKind::unitary: local = 2; break;
      case DivisorKind::exponential: local = small::tau(a); break;
      case DivisorKind::exp_unitary: local = std::uint64_t{1} << small::omega(a); break;
      case DivisorKind::unitary_exp: local = a >= 2 ? small::phi(a) : 0; break;
    }
    c = checked_mul(c, static_cast<WideNat>(local));
  }
  return c;
}

bool exponentially_coprime(FactorView a, FactorView b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].prime != b[i].prime) return false;
    if (small::gcd(a[i].exponent, b[i].exponent) != 1) return false;
  }
  return true;
}

}  // namespace exdiv
