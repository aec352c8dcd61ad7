"""High-precision reference values for the Euler-product constants.

Independent of the C++ route: log C = sum_{p <= 50} log F_p + sum_m b_m P_{>50}(m s),
where log F(r) = sum_m b_m r^m and P_{>50} is the prime zeta function with the
primes up to 50 removed.  Run with mpmath installed; prints values used as
frozen oracles in test_constants.cpp.
"""
from mpmath import mp, mpf, primezeta, zeta, log, exp, euler, pi
from sympy import primefactors, totient, primerange

mp.dps = 40
M = 400          # log-series length
SMALL = list(primerange(2, 51))


def omega(a):
    return len(primefactors(a)) if a > 1 else 0


def phi_star(a):
    r = 1
    for p in primefactors(a):
        e = 0
        while a % p == 0:
            a //= p
            e += 1
        r *= p ** e - 1
    return r


def f_tau(a): return 2 ** omega(a) if a > 0 else 1
def f_mu(a): return (-1) ** omega(a) if a > 0 else 1
def f_phi(a): return phi_star(a) if a > 0 else 1


def coeffs(f, shifts, n):
    c = [mpf(f(a)) for a in range(n + 1)]
    for k in shifts:  # multiply by (1 - x^k)
        for a in range(n, k - 1, -1):
            c[a] -= c[a - k]
    return c


def log_series(c, n):
    # b with log(sum c_a x^a) = sum b_m x^m, c_0 = 1.
    b = [mpf(0)] * (n + 1)
    for m in range(1, n + 1):
        s = m * c[m]
        for k in range(1, m):
            s -= k * b[k] * c[m - k]
        b[m] = s / m
    return b


def prime_tail(s):
    # sum_{p > max(SMALL)} p^{-s}; the direct sum avoids cancellation at large s.
    if s > 20:
        return sum(mpf(p) ** (-s) for p in primerange(SMALL[-1] + 1, 100 * SMALL[-1]))
    with mp.workdps(120):
        return +(primezeta(s) - sum(mpf(p) ** (-s) for p in SMALL))


def constant(f, shifts, sigma):
    c = coeffs(f, shifts, M)
    total = mpf(0)
    for p in SMALL:
        r = mpf(p) ** (-sigma)
        total += log(sum(c[a] * r ** a for a in range(M + 1)))
    b = log_series(c, M)
    for m in range(1, M + 1):
        if b[m] == 0:
            continue
        s = m * sigma
        pz = prime_tail(s)
        total += b[m] * pz
    return exp(total)


def ratio_constant(g):
    def f(a):
        return g(a) if a > 0 else mpf(1)
    return constant(f, [1], mpf(1))


if __name__ == "__main__":
    third = mpf(1) / 3
    print("zeta(1/2) =", zeta(mpf(1) / 2))
    print("zeta(1/3) =", zeta(third))
    print("C1 =", constant(f_tau, [1], mpf(1)))
    print("C2 =", zeta(mpf(1) / 2) * constant(f_tau, [1, 2], mpf(1) / 2))
    print("C3 =", constant(f_mu, [1], mpf(1)))
    print("C4 =", constant(f_phi, [1], mpf(1)))
    print("C5 =", zeta(third) * constant(f_phi, [1, 3], third))
    tau = lambda a: len([d for d in range(1, a + 1) if a % d == 0])
    print("T5_TAU =", ratio_constant(lambda a: mpf(2 ** omega(a)) / tau(a)))
    print("T5_PHI =", ratio_constant(lambda a: mpf(int(totient(a))) / phi_star(a)))
    print("SIGMA_LIMIT =", 6 * exp(euler) / pi ** 2)
    print("gamma =", +euler)


def t5_sigma(limit=20000, A=80):
    # Local terms depend on p; the direct product converges like sum p^{-6}.
    def sig_e(p, a):
        return sum(mpf(p) ** d for d in range(1, a + 1) if a % d == 0)

    def sig_e_star(p, a):
        return sum(mpf(p) ** d for d in range(1, a + 1) if a % d == 0 and _gcd(d, a // d) == 1)

    total = mpf(1)
    for p in primerange(2, limit):
        g_prev = mpf(1)
        local = mpf(1)
        for a in range(1, A + 1):
            g = sig_e_star(p, a) / sig_e(p, a)
            if a >= 4:
                local += (g - g_prev) / mpf(p) ** a
            g_prev = g
        total *= local
    return total


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


if __name__ == "__main__":
    print("T5_SIGMA =", t5_sigma())
