#include "exdiv/factorint.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace exdiv {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr WideNat kTwo64 = static_cast<WideNat>(1) << 64;

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

WideNat add_mod(WideNat a, WideNat b, WideNat n) {
  // a, b < n; avoid the carry out of 128 bits.
  return a >= n - b ? a - (n - b) : a + b;
}

WideNat sub_mod(WideNat a, WideNat b, WideNat n) { return a >= b ? a - b : a + (n - b); }

WideNat mul_mod(WideNat a, WideNat b, WideNat n) {
  if (n <= kTwo64) return (a * b) % n;
  // Double-and-add; operands stay below n.
  WideNat result = 0;
  a %= n;
  while (b > 0) {
    if (b & 1) result = add_mod(result, a, n);
    a = add_mod(a, a, n);
    b >>= 1;
  }
  return result;
}

WideNat pow_mod(WideNat base, WideNat e, WideNat n) {
  WideNat result = 1 % n;
  base %= n;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    e >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(WideNat n, WideNat a) {
  WideNat d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  WideNat x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

int jacobi(WideNat a, WideNat n) {
  // n odd positive.
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const auto r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

WideNat half_mod(WideNat x, WideNat n) {
  // n odd.
  if ((x & 1) == 0) return x >> 1;
  return (x >> 1) + (n >> 1) + 1;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_probable_prime(WideNat n) {
  if (isqrt(n) * isqrt(n) == n) return false;
  std::int64_t d_signed = 5;
  for (;;) {
    const WideNat d_mod = d_signed > 0 ? static_cast<WideNat>(d_signed) % n
                                       : n - static_cast<WideNat>(-d_signed) % n;
    const int j = jacobi(d_mod, n);
    if (j == -1) break;
    if (j == 0 && static_cast<WideNat>(d_signed > 0 ? d_signed : -d_signed) != n) return false;
    d_signed = d_signed > 0 ? -(d_signed + 2) : -d_signed + 2;
  }
  const WideNat d_mod = d_signed > 0 ? static_cast<WideNat>(d_signed) % n
                                     : n - static_cast<WideNat>(-d_signed) % n;
  // P = 1, Q = (1 - D) / 4.
  const std::int64_t q_signed = (1 - d_signed) / 4;
  const WideNat q_mod = q_signed >= 0 ? static_cast<WideNat>(q_signed) % n
                                      : n - static_cast<WideNat>(-q_signed) % n;

  WideNat k = n + 1;  // n < 2^128 - 1 here, so no wrap.
  int s = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++s;
  }
  WideNat u = 1, v = 1, qk = q_mod;
  const int top = 127 - static_cast<int>(k >> 64 ? __builtin_clzll(static_cast<std::uint64_t>(k >> 64))
                                                 : 64 + __builtin_clzll(static_cast<std::uint64_t>(k)));
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mul_mod(u, v, n);
    v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
    qk = mul_mod(qk, qk, n);
    if ((k >> bit) & 1) {
      const WideNat u_next = half_mod(add_mod(u, v, n), n);
      const WideNat v_next = half_mod(add_mod(mul_mod(d_mod, u, n), v, n), n);
      u = u_next;
      v = v_next;
      qk = mul_mod(qk, q_mod, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (int r = 1; r < s; ++r) {
    v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
    qk = mul_mod(qk, qk, n);
    if (v == 0) return true;
  }
  return false;
}

WideNat brent_rho(WideNat n, WideNat c) {
  constexpr int kBatch = 128;
  WideNat y = 2, x = 2, ys = 2, q = 1, g = 1;
  auto step = [&](WideNat v) { return add_mod(mul_mod(v, v, n), c, n); };
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const std::uint64_t lim = std::min<std::uint64_t>(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = step(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

// Appends the prime factors (with multiplicity) of n, whose prime factors all
// exceed the trial-division bound.
void split_large(WideNat n, std::vector<WideNat>& out) {
  if (n == 1) return;
  if (n < static_cast<WideNat>(kTrialLimit) * kTrialLimit || is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (WideNat r = isqrt(n); r * r == n) {
    split_large(r, out);
    split_large(r, out);
    return;
  }
  for (WideNat c = 1;; ++c) {
    const WideNat d = brent_rho(n, c);
    if (d != n && d != 1) {
      split_large(d, out);
      split_large(n / d, out);
      return;
    }
  }
}

}  // namespace

Factorization Factorization::from_parts(std::vector<PrimePower> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].exponent == 0) throw DomainError("factorization exponent must be positive");
    if (i > 0 && parts[i - 1].prime >= parts[i].prime)
      throw DomainError("factorization primes must be strictly increasing");
    if (!is_prime(parts[i].prime)) throw DomainError(to_string(parts[i].prime) + " is not prime");
  }
  return trusted(std::move(parts));
}

WideNat value_of(FactorView f) {
  WideNat v = 1;
  for (const auto& [p, a] : f) v = checked_mul(v, checked_pow(p, a));
  return v;
}

std::optional<WideNat> try_value_of(FactorView f) {
  try {
    return value_of(f);
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

WideNat Factorization::value() const { return value_of(parts_); }
std::optional<WideNat> Factorization::try_value() const { return try_value_of(parts_); }

double Factorization::log_value() const {
  double s = 0;
  for (const auto& [p, a] : parts_) s += a * std::log(static_cast<double>(p));
  return s;
}

bool is_prime(WideNat n) {
  static constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (unsigned a : kBases)
    if (!strong_probable_prime(n, a)) return false;
  // psi_13 = 3317044064679887385961981: the 13 bases are exact below it.
  static const WideNat kPsi13 = parse_wide("3317044064679887385961981");
  if (n < kPsi13) return true;
  return strong_lucas_probable_prime(n);
}

Factorization factor(WideNat n) {
  if (n == 0) throw DomainError("factor: n must be positive");
  std::vector<PrimePower> parts;
  for (std::uint64_t p : trial_primes()) {
    const WideNat wp = p;
    if (wp * wp > n) break;
    if (n % wp != 0) continue;
    std::uint32_t a = 0;
    do {
      n /= wp;
      ++a;
    } while (n % wp == 0);
    parts.push_back({wp, a});
  }
  if (n > 1) {
    if (n < static_cast<WideNat>(kTrialLimit) * kTrialLimit) {
      // Every factor below 10^6 is gone, so a remaining n < 10^12 is prime.
      parts.push_back({n, 1});
    } else {
      std::vector<WideNat> large;
      split_large(n, large);
      std::sort(large.begin(), large.end());
      for (WideNat q : large) {
        if (!parts.empty() && parts.back().prime == q)
          ++parts.back().exponent;
        else
          parts.push_back({q, 1});
      }
    }
  }
  return Factorization::trusted(std::move(parts));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) throw DomainError("primes_up_to: limit must be at least 2");
  if (limit > kPrimeTableGuard) throw CapacityError("primes_up_to: limit exceeds 10^9 guard");
  std::vector<std::uint64_t> primes{2};
  const auto root = static_cast<std::uint64_t>(isqrt(limit));
  // Base sieve over odd numbers up to sqrt(limit).
  std::vector<char> base(root / 2 + 1, 1);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i) {
    if (!base[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    base_primes.push_back(p);
    for (std::uint64_t j = p * p / 2; j < base.size(); j += p) base[j] = 0;
  }
  // Segmented sieve over odd numbers; index i stands for lo + 2i.
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegment) {
    const std::uint64_t hi = std::min(limit, lo + 2 * kSegment - 1);
    const std::uint64_t count = (hi - lo) / 2 + 1;
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(count), 1);
    for (std::uint64_t p : base_primes) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= hi; m += 2 * p) seg[(m - lo) / 2] = 0;
    }
    for (std::uint64_t i = 0; i < count; ++i)
      if (seg[i]) primes.push_back(lo + 2 * i);
  }
  return primes;
}

Classification classify(FactorView f) {
  Classification c;
  for (const auto& pp : f) {
    const std::uint32_t a = pp.exponent;
    if (a != 1) c.squarefree = false;
    if (a < 2) c.squarefull = false;
    if (a < 4) c.four_full = false;
    for (std::uint32_t d = 2; d * d <= a; ++d)
      if (a % (d * d) == 0) {
        c.e_squarefree = false;
        break;
      }
  }
  return c;
}

std::pair<Factorization, Factorization> powerful_split(FactorView f) {
  std::vector<PrimePower> s, m;
  for (const auto& pp : f) (pp.exponent >= 2 ? s : m).push_back(pp);
  return {Factorization::trusted(std::move(s)), Factorization::trusted(std::move(m))};
}

WideNat unitary_gcd(WideNat k, FactorView n) {
  if (k == 0) throw DomainError("unitary_gcd: k must be positive");
  // Unitary divisors of n are products of whole blocks p^a; the maximal one
  // dividing k takes every block that divides k.
  WideNat d = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto block = try_value_of(n.subspan(i, 1));
    if (block && k % *block == 0) d *= *block;
  }
  return d;
}

std::string to_text(FactorView f) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& [p, a] : f) {
    if (!out.empty()) out += '*';
    out += to_string(p);
    if (a != 1) out += '^' + std::to_string(a);
  }
  return out;
}

Factorization parse_factorization(std::string_view text) {
  if (text.find_first_of("^*") == std::string_view::npos) return factor(parse_wide(text));
  std::vector<PrimePower> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view term = text.substr(pos, end - pos);
    const std::size_t caret = term.find('^');
    const WideNat base = parse_wide(term.substr(0, caret));
    std::uint64_t exp = 1;
    if (caret != std::string_view::npos) {
      const WideNat e = parse_wide(term.substr(caret + 1));
      if (e > 0xffffffffu) throw DomainError("exponent too large in '" + std::string(term) + "'");
      exp = static_cast<std::uint64_t>(e);
    }
    if (base == 1 && exp >= 1) {
      // "1" is the empty product; tolerate it as a factor.
    } else if (!is_prime(base)) {
      throw DomainError("'" + to_string(base) + "' is not prime in factorization text");
    } else if (exp > 0) {
      parts.push_back({base, static_cast<std::uint32_t>(exp)});
    }
    pos = end + 1;
  }
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.prime < y.prime; });
  std::vector<PrimePower> merged;
  for (const auto& pp : parts) {
    if (!merged.empty() && merged.back().prime == pp.prime) {
      const std::uint64_t sum = std::uint64_t{merged.back().exponent} + pp.exponent;
      if (sum > 0xffffffffu) throw DomainError("exponent overflow in factorization text");
      merged.back().exponent = static_cast<std::uint32_t>(sum);
    } else {
      merged.push_back(pp);
    }
  }
  return Factorization::trusted(std::move(merged));
}

}  // namespace exdiv
