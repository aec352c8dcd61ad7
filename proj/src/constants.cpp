#include "exdiv/constants.hpp"

#include <algorithm>
#include <cctype>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <vector>

#include "exdiv/factorint.hpp"
#include "exdiv/rational.hpp"
#include "exdiv/smallint.hpp"

namespace exdiv {

namespace {

using Real = long double;

constexpr unsigned kMaxSeriesTerms = 4096;
constexpr unsigned kMaxZetaShift = 40;
constexpr Real kSeriesTolerance = 1e-22L;
// pi(x) < 1.25506 x / log x for x > 1.
constexpr Real kPrimeCountConstant = 1.25506L;

// Upper bound for sum_{p > P} p^{-e}, e > 1, by partial summation against the
// prime-counting bound above.
Real prime_power_tail(Real e, Real P) {
  return kPrimeCountConstant * e * std::pow(P, 1 - e) / ((e - 1) * std::log(P));
}

// f(p^a) for the p-independent functions of the exponent, with f(p^0) = 1.
long long exponent_function(ConstantId id, std::uint64_t a) {
  if (a == 0) return 1;
  switch (id) {
    case ConstantId::C1:
    case ConstantId::C2: return 1LL << small::omega(a);
    case ConstantId::C3: return small::omega(a) % 2 == 0 ? 1 : -1;
    case ConstantId::C4:
    case ConstantId::C5: return static_cast<long long>(small::phi_star(a));
    default: throw DomainError("no exponent function for this constant");
  }
}

struct ZetaShape {
  Real sigma;                   // local variable r = p^{-sigma}
  std::vector<unsigned> shifts;  // the local series is multiplied by prod (1 - r^k)
  Real prefactor_zeta_at;       // 0 when there is no zeta prefactor
};

ZetaShape shape_of(ConstantId id) {
  switch (id) {
    case ConstantId::C1: return {1.0L, {1}, 0};
    case ConstantId::C2: return {0.5L, {1, 2}, 0.5L};
    case ConstantId::C3: return {1.0L, {1}, 0};
    case ConstantId::C4: return {1.0L, {1}, 0};
    case ConstantId::C5: return {1.0L / 3, {1, 3}, 1.0L / 3};
    default: throw DomainError("not a zeta-shaped constant");
  }
}

// Coefficients c_0..c_n of the local factor: f's local series times the shape.
std::vector<long long> generic_coefficients(ConstantId id, const ZetaShape& shape, unsigned n) {
  std::vector<long long> c(n + 1);
  for (unsigned a = 0; a <= n; ++a) c[a] = exponent_function(id, a);
  for (unsigned k : shape.shifts)
    for (unsigned a = n; a >= k; --a) c[a] -= c[a - k];
  return c;
}

// The coefficients as the closed-form series print them.
std::vector<long long> written_coefficients(ConstantId id, unsigned n) {
  auto w = [](std::uint64_t a) { return 1LL << small::omega(a); };
  auto m = [](std::uint64_t a) { return small::omega(a) % 2 == 0 ? 1LL : -1LL; };
  auto f = [](std::uint64_t a) { return static_cast<long long>(small::phi_star(a)); };
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (unsigned a = 1; a <= n; ++a) {
    switch (id) {
      case ConstantId::C1:
        if (a == 2) c[a] = 1;
        if (a >= 6) c[a] = w(a) - w(a - 1);
        break;
      case ConstantId::C2:
        if (a >= 4) c[a] = w(a) - w(a - 1) - w(a - 2) + w(a - 3);
        break;
      case ConstantId::C3:
        if (a >= 2) c[a] = m(a) - m(a - 1);
        break;
      case ConstantId::C4:
        if (a >= 3) c[a] = f(a) - f(a - 1);
        break;
      case ConstantId::C5:
        if (a == 4) c[a] = 1;
        if (a >= 5) c[a] = f(a) - f(a - 1) - f(a - 3) + f(a - 4);
        break;
      default: throw DomainError("not a zeta-shaped constant");
    }
  }
  return c;
}

// Exponents e_k with F(r) = prod_k (1 - r^k)^{-e_k} (1 + O(r^{K+1})).
std::vector<BigInt> zeta_exponents(const std::vector<long long>& c, unsigned K) {
  std::vector<BigInt> g(K + 1);
  for (unsigned a = 0; a <= K; ++a) g[a] = static_cast<long>(c[a]);
  std::vector<BigInt> e(K + 1);
  for (unsigned k = 1; k <= K; ++k) {
    e[k] = g[k];
    if (e[k] == 0) continue;
    // (1 - x^k)^{e_k} = sum_j binom(e_k, j) (-x^k)^j
    std::vector<BigInt> factor(K + 1);
    BigInt binom = 1;
    for (unsigned j = 0; j * k <= K; ++j) {
      if (j > 0) binom = binom * (e[k] - (j - 1)) / static_cast<long>(j);
      factor[j * k] = j % 2 == 0 ? binom : BigInt(-binom);
    }
    std::vector<BigInt> next(K + 1);
    for (unsigned i = 0; i <= K; ++i)
      for (unsigned j = 0; i + j <= K; ++j)
        if (factor[j] != 0) next[i + j] += g[i] * factor[j];
    g = std::move(next);
  }
  return e;
}

struct LocalSum {
  Real value;
  Real error;  // absolute truncation error bound
  unsigned terms;
};

// sum_{a <= N} c_a r^a with N >= A, extended until the tail is negligible;
// |c_a| <= K a for a >= 1.
LocalSum sum_local_series(const std::vector<long long>& c, Real r, unsigned A, Real K) {
  Real sum = 0, power = 1;
  const Real denom = (1 - r) * (1 - r);
  unsigned N = 0;
  for (;; ++N) {
    sum += static_cast<Real>(c[N]) * power;
    power *= r;
    const Real tail = K * (N + 1) * power / denom;
    if ((N >= A && tail <= kSeriesTolerance) || N + 1 >= c.size()) return {sum, tail, N + 1};
  }
}

EulerProductEstimate zeta_shaped_product(ConstantId id, WideNat prime_limit, unsigned A) {
  const ZetaShape shape = shape_of(id);
  const auto c = generic_coefficients(id, shape, kMaxSeriesTerms);
  constexpr Real kCoeff = 2;  // |c_a| <= 2a

  const auto e_big = zeta_exponents(c, kMaxZetaShift);
  std::vector<Real> e(kMaxZetaShift + 1);
  for (unsigned k = 1; k <= kMaxZetaShift; ++k) e[k] = static_cast<Real>(e_big[k].get_d());

  // Cauchy bound on the circle |z| = 1/2 for the coefficients of the
  // remainder R(z) = F(z) prod_{k<=K} (1 - z^k)^{e_k}, choosing K to minimise
  // the bound on sum_{p > P} |R(p^{-sigma}) - 1|.
  const Real P = static_cast<Real>(prime_limit);
  const Real rho = 0.5L;
  Real f_hat = 0, power = 1;
  for (unsigned a = 0; a < 200; ++a, power *= rho) f_hat += std::fabs(static_cast<Real>(c[a])) * power;
  f_hat += kCoeff * 201 * std::pow(rho, 201) / ((1 - rho) * (1 - rho));
  const Real t = std::pow(P, -shape.sigma) / rho;
  if (t >= 0.5L) throw DomainError("prime limit too small for the tail bound");

  unsigned best_K = 0;
  Real best_tail = INFINITY, log_m = std::log(f_hat);
  for (unsigned k = 1; k <= kMaxZetaShift; ++k) {
    log_m += e[k] * std::log(e[k] >= 0 ? 1 + std::pow(rho, k) : 1 - std::pow(rho, k));
    if (e[k] != 0 && k * shape.sigma <= 1) continue;  // zeta(k sigma) undefined; K must go further
    const Real exponent = shape.sigma * (k + 1);
    if (exponent <= 1) continue;
    const Real delta_max = std::exp(log_m) * std::pow(t, k + 1) / (1 - t);
    if (delta_max >= 0.5L) continue;
    const Real tail = std::exp(log_m + (k + 1) * std::log(1 / rho)) / (1 - t) * prime_power_tail(exponent, P) /
                      (1 - delta_max);
    if (tail < best_tail) best_tail = tail, best_K = k;
  }
  if (best_K == 0) throw DomainError("no admissible zeta extraction order");
  for (unsigned k = 1; k <= best_K; ++k)
    if (e[k] != 0 && k * shape.sigma <= 1) throw DomainError("zeta extraction hits the pole");

  Real log_value = 0, series_error = 0, rounding_ops = 0;
  for (unsigned k = 1; k <= best_K; ++k) {
    if (e[k] == 0) continue;
    log_value += e[k] * std::log(zeta_real_long(k * shape.sigma));
    rounding_ops += 64 * (std::fabs(e[k]) + 1);
  }
  Real value = std::exp(log_value);
  Real product = 1;
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(prime_limit))) {
    const Real r = std::pow(static_cast<Real>(p), -shape.sigma);
    const LocalSum local = sum_local_series(c, r, A, kCoeff);
    if (local.value <= local.error) throw DomainError("local factor not bounded away from zero");
    series_error += local.error / (local.value - local.error);
    Real remainder = local.value;
    for (unsigned k = 1; k <= best_K; ++k)
      if (e[k] != 0) remainder *= std::pow(1 - std::pow(r, static_cast<Real>(k)), e[k]);
    product *= remainder;
    rounding_ops += local.terms + 3 * best_K + 4;
  }
  value *= product;
  if (shape.prefactor_zeta_at != 0) {
    value *= zeta_real_long(shape.prefactor_zeta_at);
    rounding_ops += 64;
  }
  const Real relative = series_error + best_tail + rounding_ops * LDBL_EPSILON;
  const Real bound = std::fabs(value) * std::expm1(relative) + std::fabs(value) * DBL_EPSILON;
  return {id, static_cast<double>(value), prime_limit, A, static_cast<double>(bound)};
}

// g(p^a) for the quotient constants, with g(1) = 1.
Real quotient_local(ConstantId id, std::uint64_t p, std::uint64_t a) {
  if (a == 0) return 1;
  switch (id) {
    case ConstantId::T5_TAU:
      return static_cast<Real>(1ULL << small::omega(a)) / static_cast<Real>(small::tau(a));
    case ConstantId::T5_PHI: return static_cast<Real>(small::phi(a)) / static_cast<Real>(small::phi_star(a));
    case ConstantId::T5_SIGMA: {
      // sum over unitary d | a of p^{d-a}, over all d | a of p^{d-a}
      Real num = 0, den = 0;
      const Real pl = static_cast<Real>(p);
      for (std::uint64_t d : small::divisors(a)) {
        const Real term = std::pow(pl, static_cast<Real>(d) - static_cast<Real>(a));
        den += term;
        if (small::gcd(d, a / d) == 1) num += term;
      }
      return num / den;
    }
    default: throw DomainError("not a quotient constant");
  }
}

EulerProductEstimate quotient_product(ConstantId id, WideNat prime_limit, unsigned A) {
  const Real P = static_cast<Real>(prime_limit);
  Real product = 1, series_error = 0, rounding_ops = 0;
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(prime_limit))) {
    const Real r = 1 / static_cast<Real>(p);
    Real sum = 1, power = 1, previous = 1;
    unsigned a = 1;
    for (;; ++a) {
      power *= r;
      const Real g = quotient_local(id, p, a);
      sum += (g - previous) * power;
      previous = g;
      // |g(p^a) - g(p^{a-1})| <= 1
      const Real tail = power * r / (1 - r);
      if ((a >= A && tail <= kSeriesTolerance) || a >= kMaxSeriesTerms) {
        series_error += tail / (sum - tail);
        break;
      }
    }
    product *= sum;
    rounding_ops += 4 * a + 2;
  }
  // Beyond P: |F_p - 1| <= sum_{a >= 4} p^{-a} <= p^{-4} / (1 - 1/P).
  const Real tail_sum = prime_power_tail(4, P) / (1 - 1 / P);
  const Real relative = series_error + tail_sum / (1 - std::pow(P, -4) / (1 - 1 / P)) + rounding_ops * LDBL_EPSILON;
  const Real bound = product * std::expm1(relative) + product * DBL_EPSILON;
  return {id, static_cast<double>(product), prime_limit, A, static_cast<double>(bound)};
}

}  // namespace

std::string_view name(ConstantId id) {
  switch (id) {
    case ConstantId::C1: return "C1";
    case ConstantId::C2: return "C2";
    case ConstantId::C3: return "C3";
    case ConstantId::C4: return "C4";
    case ConstantId::C5: return "C5";
    case ConstantId::T5_TAU: return "T5_TAU";
    case ConstantId::T5_SIGMA: return "T5_SIGMA";
    case ConstantId::T5_PHI: return "T5_PHI";
    case ConstantId::SIGMA_LIMIT: return "SIGMA_LIMIT";
  }
  return "?";
}

ConstantId parse_constant_id(std::string_view text) {
  std::string key(text);
  for (char& ch : key) ch = ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (ConstantId id : kAllConstants)
    if (name(id) == key) return id;
  throw DomainError("unknown constant '" + std::string(text) + "'");
}

long double zeta_real_long(long double s) {
  if (!(s > 0)) throw DomainError("zeta_real: requires s > 0");
  if (s == 1) throw DomainError("zeta_real: pole at s = 1");
  // eta(s) = sum (-1)^k (k+1)^{-s}, accelerated (Cohen, Rodriguez Villegas, Zagier).
  constexpr int n = 64;
  Real d = std::pow(3 + std::sqrt(8.0L), static_cast<Real>(n));
  d = (d + 1 / d) / 2;
  Real b = -1, c = -d, sum = 0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(static_cast<Real>(k + 1), -s);
    b = static_cast<Real>(k + n) * static_cast<Real>(k - n) * b / ((k + 0.5L) * (k + 1));
  }
  const Real eta = sum / d;
  return eta / -std::expm1((1 - s) * std::log(2.0L));
}

double zeta_real(double s) { return static_cast<double>(zeta_real_long(s)); }

long double euler_gamma_from_harmonic(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_gamma_from_harmonic: n >= 1");
  Real h = 0;
  for (std::uint64_t k = n; k >= 1; --k) h += 1 / static_cast<Real>(k);
  const Real x = static_cast<Real>(n);
  return h - std::log(x) - 1 / (2 * x) + 1 / (12 * x * x);
}

EulerProductEstimate euler_product(ConstantId id, WideNat prime_limit, unsigned series_limit) {
  if (prime_limit < 100) throw DomainError("euler_product: prime limit must be at least 100");
  if (series_limit < 32) throw DomainError("euler_product: series limit must be at least 32");
  if (prime_limit > kPrimeTableGuard) throw CapacityError("euler_product: prime limit above the prime-table guard");
  switch (id) {
    case ConstantId::SIGMA_LIMIT: {
      const Real v = std::exp(kEulerGamma) / zeta_real_long(2);
      return {id, static_cast<double>(v), prime_limit, series_limit, static_cast<double>(v * 4 * DBL_EPSILON)};
    }
    case ConstantId::T5_TAU:
    case ConstantId::T5_SIGMA:
    case ConstantId::T5_PHI: return quotient_product(id, prime_limit, series_limit);
    default: return zeta_shaped_product(id, prime_limit, series_limit);
  }
}

bool internal_consistency_check(ConstantId id) {
  constexpr unsigned n = 64;
  switch (id) {
    case ConstantId::SIGMA_LIMIT: {
      const Real pi = std::acos(-1.0L);
      return std::fabs(euler_gamma_from_harmonic(10000) - kEulerGamma) < 1e-15L &&
             std::fabs(zeta_real_long(2) - pi * pi / 6) < 1e-15L;
    }
    case ConstantId::T5_TAU:
    case ConstantId::T5_SIGMA:
    case ConstantId::T5_PHI:
      // The written series starts at a = 4: the generic differences vanish below.
      for (std::uint64_t p : {2, 3, 5, 7, 101})
        for (std::uint64_t a = 1; a <= 3; ++a)
          if (quotient_local(id, p, a) != 1) return false;
      return quotient_local(id, 2, 4) < 1;
    default: return generic_coefficients(id, shape_of(id), n) == written_coefficients(id, n);
  }
}

std::string to_text(const EulerProductEstimate& e) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.15g ± %.3g (P=%s, A=%u)", std::string(name(e.constant_id)).c_str(),
                e.value, e.tail_bound, to_string(e.prime_limit).c_str(), e.series_limit);
  return buf;
}

}  // namespace exdiv
