"""Independent high-precision evaluation of the figure-set solutions.

N(t) = N0 sum_n A_n (z/2)^{mu+2n} sum_r Gamma(beta_n) (-(rate t)^nu)^r / Gamma(beta_n + nu r)
with A_n = (-c)^n (gamma)_{n,k} / (Gamma_k(mu + lambda n + (b+1)/2) (n!)^2).
Uses mpmath at 50 digits; shares no code with the C++ library.
"""
from mpmath import mp, mpf, gamma, rf, factorial, nsum, inf

mp.dps = 50

def kgamma(x, k):
    return k ** (x / k - 1) * gamma(x / k)

def kpoch(x, n, k):
    return k ** n * rf(x / k, n)

def solution(theorem, lam, t, n0=2, c=2, k=2, b=3, d=3, a=1, mu=1, nu=1, g=1, terms=80):
    t = mpf(t)
    lam = mpf(lam)
    rate = a if theorem == 3 else d
    z = t if theorem == 1 else mpf(d) ** nu * t ** nu
    x = -(mpf(rate) ** nu) * t ** nu
    total = mpf(0)
    for n in range(terms):
        A = (-c) ** n * kpoch(mpf(g), n, k) / (kgamma(mu + lam * n + mpf(b + 1) / 2, k) * factorial(n) ** 2)
        order = mu + 2 * n
        beta = order + 1 if theorem == 1 else nu * order + 1
        inner = nsum(lambda r: gamma(beta) * x ** r / gamma(beta + nu * r), [0, inf])
        total += A * (z / 2) ** order * inner
    return n0 * total

if __name__ == "__main__":
    import sys
    for theorem, lam, t in [(1, 1, 1.85), (1, 1, 1.0), (1, 1, 0.5), (1, 1.25, 2.0), (3, 2, 0.05)]:
        print(theorem, lam, t, mp.nstr(solution(theorem, lam, t), 20))
