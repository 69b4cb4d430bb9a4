"""Independent reference implementations used only by the tests.

Everything here uses explicit finite-sum formulas in exact rational
arithmetic, so none of it shares code paths with the package.
"""
from fractions import Fraction
from math import factorial


def gbinom(top, k):
    """Generalized binomial coefficient C(top, k) for rational top."""
    out = Fraction(1)
    for j in range(k):
        out *= Fraction(top) - j
    return out / factorial(k)


def laguerre_exact(n, alpha, x):
    alpha, x = Fraction(alpha), Fraction(x)
    return sum(
        (-1) ** i * gbinom(n + alpha, n - i) * x**i / factorial(i) for i in range(n + 1)
    )


def laguerre_coeffs(n, alpha):
    """Power-basis coefficients of L_n^alpha, lowest degree first."""
    alpha = Fraction(alpha)
    return [(-1) ** i * gbinom(n + alpha, n - i) / factorial(i) for i in range(n + 1)]


def jacobi_exact(n, alpha, beta, x):
    alpha, beta, x = Fraction(alpha), Fraction(beta), Fraction(x)
    return sum(
        gbinom(n + alpha, n - s) * gbinom(n + beta, s)
        * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s)
        for s in range(n + 1)
    )


def rising(a, k):
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(a) + i
    return out


def gegenbauer_exact(n, lam, x):
    lam, x = Fraction(lam), Fraction(x)
    return sum(
        (-1) ** k * rising(lam, n - k) / (factorial(k) * factorial(n - 2 * k)) * (2 * x) ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )
