#include "exdiv/convolve.hpp"

#include <string>

#include "exdiv/divisors.hpp"
#include "exdiv/smallint.hpp"

namespace exdiv {

namespace {

std::vector<Factorization> factor_range(std::uint64_t limit) {
  std::vector<Factorization> out(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) out[n] = factor(n);
  return out;
}

// Visits every split n = B * C in which B = prod p^{b_i}, C = prod p^{c_i},
// b_i c_i = a_i, and b_i ranges over `left_exponents(a_i)`.
template <typename Visit>
void for_each_exponent_split(FactorView f, DivisorKind exponent_kind, Visit&& visit) {
  std::vector<std::vector<std::uint32_t>> choices;
  choices.reserve(f.size());
  for (const auto& pp : f) choices.push_back(admissible_exponents(pp.exponent, exponent_kind));
  std::vector<std::size_t> idx(f.size(), 0);
  for (;;) {
    std::uint64_t left = 1, right = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::uint32_t b = choices[i][idx[i]];
      const std::uint32_t c = f[i].exponent / b;
      const auto p = static_cast<std::uint64_t>(f[i].prime);
      for (std::uint32_t k = 0; k < b; ++k) left *= p;
      for (std::uint32_t k = 0; k < c; ++k) right *= p;
    }
    visit(left, right);
    std::size_t i = 0;
    while (i < f.size() && idx[i] + 1 == choices[i].size()) idx[i++] = 0;
    if (i == f.size()) return;
    ++idx[i];
  }
}

std::uint64_t radical(FactorView f) {
  std::uint64_t r = 1;
  for (const auto& pp : f) r *= static_cast<std::uint64_t>(pp.prime);
  return r;
}

}  // namespace

std::string_view name(ConvolutionKind kind) {
  switch (kind) {
    case ConvolutionKind::dirichlet: return "dirichlet";
    case ConvolutionKind::unitary: return "unitary";
    case ConvolutionKind::exponential: return "exponential";
    case ConvolutionKind::exp_unitary: return "exp-unitary";
  }
  return "?";
}

TabulatedFunction::TabulatedFunction(std::uint64_t limit) : values_(limit + 1) {
  if (limit == 0) throw DomainError("tabulated function needs limit >= 1");
}

TabulatedFunction TabulatedFunction::of(FunctionId id, std::uint64_t limit) {
  return generate(limit, [id](std::uint64_t, FactorView f) { return ExactRational(to_big(eval(id, f))); });
}

TabulatedFunction TabulatedFunction::generate(std::uint64_t limit,
                                              const std::function<ExactRational(std::uint64_t, FactorView)>& fn) {
  TabulatedFunction t(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const Factorization f = factor(n);
    t.values_[n] = fn(n, f);
    t.values_[n].canonicalize();
  }
  return t;
}

TabulatedFunction convolve(ConvolutionKind kind, const TabulatedFunction& f, const TabulatedFunction& g) {
  if (f.limit() != g.limit()) throw DomainError("convolve: tabulation limits differ");
  const std::uint64_t limit = f.limit();
  TabulatedFunction h(limit);
  if (kind == ConvolutionKind::dirichlet) {
    for (std::uint64_t d = 1; d <= limit; ++d) {
      if (f(d) == 0) continue;
      for (std::uint64_t m = 1; d * m <= limit; ++m) h[d * m] += f(d) * g(m);
    }
    return h;
  }
  const auto factors = factor_range(limit);
  h[1] = f(1) * g(1);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    ExactRational acc = 0;
    if (kind == ConvolutionKind::unitary) {
      for (WideNat d : enumerate(factors[n], DivisorKind::unitary)) {
        const auto dd = static_cast<std::uint64_t>(d);
        acc += f(dd) * g(n / dd);
      }
    } else {
      const DivisorKind exps = kind == ConvolutionKind::exponential ? DivisorKind::exponential : DivisorKind::exp_unitary;
      for_each_exponent_split(factors[n], exps, [&](std::uint64_t b, std::uint64_t c) { acc += f(b) * g(c); });
    }
    h[n] = acc;
  }
  return h;
}

TabulatedFunction e_unitary_inverse(const TabulatedFunction& f) {
  const std::uint64_t limit = f.limit();
  const auto factors = factor_range(limit);
  TabulatedFunction g(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const FactorView fn = factors[n];
    const std::uint64_t rad = radical(fn);
    if (f(rad) == 0)
      throw NotInvertibleError(rad, "not invertible under the e-unitary convolution: f(" + std::to_string(rad) +
                                        ") = 0 at a squarefree point");
    // The split with every b_i = 1 pairs f(rad n) with g(n); all other
    // splits reference g at smaller arguments.
    ExactRational rest = 0;
    if (n > 1)
      for_each_exponent_split(fn, DivisorKind::exp_unitary, [&](std::uint64_t b, std::uint64_t c) {
        if (c != n) rest += f(b) * g(c);
      });
    const ExactRational target(classify(fn).squarefree ? 1 : 0);  // mu^2
    g[n] = (target - rest) / f(rad);
  }
  return g;
}

LocalSeries::LocalSeries(WideNat prime, std::vector<ExactRational> coefficients)
    : prime_(prime), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("local series needs at least the constant coefficient");
}

std::optional<ExactRational> LocalSeries::coefficient(unsigned a) const {
  if (a > truncation()) return std::nullopt;
  return coefficients_[a];
}

LocalSeries local_series(FunctionId id, WideNat p, unsigned A) {
  if (!is_multiplicative(id)) throw DomainError("local_series: '" + std::string(name(id)) + "' is not multiplicative");
  if (A > kMaxLocalTruncation) throw DomainError("local_series: truncation above 64");
  if (!is_prime(p)) throw DomainError("local_series: " + to_string(p) + " is not prime");
  std::vector<ExactRational> c(A + 1);
  for (unsigned a = 0; a <= A; ++a) c[a] = ExactRational(prime_power_value_big(id, p, a));
  return {p, std::move(c)};
}

LocalSeries series_divide_zeta_shape(const LocalSeries& s, std::span<const unsigned> numerator_shifts,
                                     std::span<const unsigned> denominator_shifts) {
  std::vector<ExactRational> c = s.coefficients();
  const std::size_t n = c.size();
  for (unsigned k : numerator_shifts) {
    if (k == 0 || k > s.truncation()) throw DomainError("zeta shift out of range");
    for (std::size_t a = n; a-- > k;) c[a] -= c[a - k];
  }
  for (unsigned k : denominator_shifts) {
    if (k == 0 || k > s.truncation()) throw DomainError("zeta shift out of range");
    for (std::size_t a = k; a < n; ++a) c[a] += c[a - k];
  }
  return {s.prime(), std::move(c)};
}

LocalSeries series_multiply(const LocalSeries& a, const LocalSeries& b) {
  if (a.prime() != b.prime()) throw DomainError("series_multiply: different primes");
  const unsigned A = std::min(a.truncation(), b.truncation());
  std::vector<ExactRational> c(A + 1);
  for (unsigned i = 0; i <= A; ++i)
    for (unsigned j = 0; i + j <= A; ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return {a.prime(), std::move(c)};
}

namespace {
constexpr int kVLocal[12] = {1, 0, 0, 0, 0, 2, 2, 2, -1, -2, -2, -2};
}

LocalSeries v_coefficients(WideNat p, unsigned A) {
  if (A < 11) throw DomainError("v_coefficients: truncation must be at least 11");
  std::vector<ExactRational> c(A + 1);
  for (unsigned a = 0; a < 12; ++a) c[a] = kVLocal[a];
  return {p, std::move(c)};
}

SignedWide v_value(FactorView e) {
  SignedWide v = 1;
  for (const auto& pp : e) {
    if (pp.exponent >= 12) return 0;
    v *= kVLocal[pp.exponent];
    if (v == 0) return 0;
  }
  return v;
}

bool verify_l4_identity(WideNat n) { return verify_l4_identity(factor(n)); }

bool verify_l4_identity(FactorView n) {
  const SignedWide lhs = eval(FunctionId::chi_4_full, n) * (SignedWide{1} << n.size());
  // d = prod p^{k_i} with 4 k_i <= a_i; e = n / d^4.
  std::vector<std::uint32_t> k(n.size(), 0);
  SignedWide rhs = 0;
  for (;;) {
    SignedWide tau_d = 1, v_e = 1;
    for (std::size_t i = 0; i < n.size() && v_e != 0; ++i) {
      tau_d *= k[i] + 1;
      const std::uint32_t rest = n[i].exponent - 4 * k[i];
      v_e *= rest >= 12 ? 0 : kVLocal[rest];
    }
    rhs += tau_d * v_e;
    std::size_t i = 0;
    while (i < n.size() && 4 * (k[i] + 1) > n[i].exponent) k[i++] = 0;
    if (i == n.size()) break;
    ++k[i];
  }
  return lhs == rhs;
}

}  // namespace exdiv
