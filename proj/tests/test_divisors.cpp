#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "exdiv/divisors.hpp"

using namespace exdiv;

namespace {

std::vector<WideNat> W(std::initializer_list<unsigned long long> xs) { return {xs.begin(), xs.end()}; }

bool subset(const std::vector<WideNat>& a, const std::vector<WideNat>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// e-unitary divisors of n by scanning every d | n and testing b_i |_* a_i.
std::vector<WideNat> exp_unitary_bruteforce(std::uint64_t n) {
  const auto fn = factor(n);
  std::vector<WideNat> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const auto fd = factor(d);
    if (fd.size() != fn.size() && n != 1) continue;
    bool ok = true;
    for (std::size_t i = 0; i < fn.size() && ok; ++i) {
      const std::uint64_t a = fn.parts()[i].exponent;
      if (fd.parts()[i].prime != fn.parts()[i].prime) ok = false;
      const std::uint64_t b = fd.parts()[i].exponent;
      ok = ok && a % b == 0 && std::gcd(b, a / b) == 1;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("paper examples for p^12") {
  const auto f = factor(4096);
  CHECK(enumerate(f, DivisorKind::exp_unitary) == W({2, 8, 16, 4096}));
  CHECK(enumerate(f, DivisorKind::exponential) == W({2, 4, 8, 16, 64, 4096}));
  CHECK(count(f, DivisorKind::exp_unitary) == 4);
}

TEST_CASE("exp_unitary of 36 against brute force") {
  CHECK(enumerate(factor(36), DivisorKind::exp_unitary) == W({6, 12, 18, 36}));
  for (std::uint64_t n = 1; n <= 3000; ++n)
    REQUIRE(enumerate(factor(n), DivisorKind::exp_unitary) == exp_unitary_bruteforce(n));
}

TEST_CASE("n = 1 convention for every kind") {
  for (auto k : {DivisorKind::all, DivisorKind::unitary, DivisorKind::exponential, DivisorKind::exp_unitary,
                 DivisorKind::unitary_exp}) {
    CHECK(enumerate(Factorization{}, k) == W({1}));
    CHECK(count(Factorization{}, k) == 1);
  }
}

TEST_CASE("unitary e-divisor counts") {
  CHECK(count(factor(16), DivisorKind::unitary_exp) == 2);
  CHECK(enumerate(factor(16), DivisorKind::unitary_exp) == W({2, 8}));
  CHECK(count(factor(60), DivisorKind::unitary_exp) == 0);
  CHECK(enumerate(factor(60), DivisorKind::unitary_exp).empty());
}

TEST_CASE("exponentially_coprime") {
  CHECK(exponentially_coprime(factor(72), factor(12)));
  CHECK_FALSE(exponentially_coprime(factor(4), factor(16)));
  CHECK_FALSE(exponentially_coprime(factor(2), factor(3)));
}

TEST_CASE("kind names") {
  CHECK(parse_divisor_kind("exp-unitary") == DivisorKind::exp_unitary);
  CHECK(parse_divisor_kind("unitary_exp") == DivisorKind::unitary_exp);
  CHECK(name(DivisorKind::exponential) == "exponential");
  CHECK_THROWS_AS(parse_divisor_kind("bogus"), DomainError);
}

TEST_CASE("divisor-system properties up to 10^5") {
  const std::array kinds = {DivisorKind::all, DivisorKind::unitary, DivisorKind::exponential,
                            DivisorKind::exp_unitary, DivisorKind::unitary_exp};
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto f = factor(n);
    const auto all = enumerate(f, DivisorKind::all);
    const auto uni = enumerate(f, DivisorKind::unitary);
    const auto ex = enumerate(f, DivisorKind::exponential);
    const auto eu = enumerate(f, DivisorKind::exp_unitary);
    const auto ue = enumerate(f, DivisorKind::unitary_exp);
    REQUIRE(subset(eu, ex));
    REQUIRE(subset(ex, all));
    REQUIRE(subset(uni, all));
    const auto c = classify(f);
    if (c.squarefree) REQUIRE(uni == all);
    if (c.e_squarefree) REQUIRE(eu == ex);
    const std::array<const std::vector<WideNat>*, 5> sets = {&all, &uni, &ex, &eu, &ue};
    for (std::size_t i = 0; i < kinds.size(); ++i) REQUIRE(count(f, kinds[i]) == sets[i]->size());
    if (c.squarefull && n > 1) {
      // Unitary e-divisors are exactly the d | n with d, n/d exponentially coprime.
      std::vector<WideNat> expected;
      for (WideNat d : all)
        if (exponentially_coprime(factor(d), factor(n / static_cast<std::uint64_t>(d)))) expected.push_back(d);
      REQUIRE(ue == expected);
    }
  }
}

TEST_CASE("enumeration guards") {
  // 2^40 has 41 divisors, but a product of 21 distinct primes has 2^21 > 2^20.
  std::vector<PrimePower> parts;
  for (std::uint64_t p : primes_up_to(80)) parts.push_back({p, 1});
  const auto f = Factorization::from_parts(parts);
  CHECK_THROWS_AS(enumerate(f, DivisorKind::all), CapacityError);
  CHECK(count(f, DivisorKind::unitary) == (WideNat{1} << parts.size()));
  CHECK_THROWS_AS(enumerate(parse_factorization("2^200"), DivisorKind::all), OverflowError);
}
