#include "exdiv/smallint.hpp"

#include <algorithm>
#include <stdexcept>

#include "exdiv/wide.hpp"

namespace exdiv::small {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_small(std::uint64_t m) {
  if (m == 0) throw DomainError("factor_small: argument must be positive");
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    std::uint32_t a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> ds{1};
  for (const auto& [p, a] : factor_small(m)) {
    const std::size_t n = ds.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::uint64_t> unitary_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> ds{1};
  for (const auto& [p, a] : factor_small(m)) {
    std::uint64_t block = 1;
    for (std::uint32_t k = 0; k < a; ++k) block *= p;
    const std::size_t n = ds.size();
    for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * block);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::uint64_t tau(std::uint64_t m) {
  std::uint64_t t = 1;
  for (const auto& pa : factor_small(m)) t *= pa.second + 1;
  return t;
}

std::uint32_t omega(std::uint64_t m) { return static_cast<std::uint32_t>(factor_small(m).size()); }

int mu(std::uint64_t m) {
  int s = 1;
  for (const auto& pa : factor_small(m)) {
    if (pa.second > 1) return 0;
    s = -s;
  }
  return s;
}

std::uint64_t phi(std::uint64_t m) {
  std::uint64_t r = m;
  for (const auto& pa : factor_small(m)) r = r / pa.first * (pa.first - 1);
  return r;
}

std::uint64_t phi_star(std::uint64_t m) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : factor_small(m)) {
    std::uint64_t block = 1;
    for (std::uint32_t k = 0; k < a; ++k) block *= p;
    r *= block - 1;
  }
  return r;
}

bool is_squarefree(std::uint64_t m) { return mu(m) != 0; }

}  // namespace exdiv::small
