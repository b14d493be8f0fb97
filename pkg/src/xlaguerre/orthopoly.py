"""Classical Laguerre polynomials and the X1 exceptional Laguerre family."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .polycore import Poly, to_fraction

__all__ = [
    "laguerre",
    "laguerre_series",
    "laguerre_ode_residual",
    "laguerre_norm",
    "x1_laguerre",
    "x1_ode_residual",
    "x1_norm",
]


@lru_cache(maxsize=512)
def _laguerre_cached(n: int, alpha: Fraction) -> Poly:
    z = Poly.z()
    prev, cur = Poly(), Poly.one()
    # (k+1) L_{k+1} = (2k + alpha + 1 - z) L_k - (k + alpha) L_{k-1}
    for k in range(n):
        nxt = ((2 * k + alpha + 1 - z) * cur - (k + alpha) * prev) / (k + 1)
        prev, cur = cur, nxt
    return cur


def laguerre(n: int, alpha) -> Poly:
    """Generalized Laguerre polynomial L_n^(alpha)(z), exact.

    Built from the three-term recurrence.  ``alpha`` may be any rational,
    including negative values (needed for the type II seeds).  By
    convention ``laguerre(-1, alpha)`` is the zero polynomial.
    """
    if n < -1:
        raise ValueError("laguerre degree must be >= -1")
    if n == -1:
        return Poly()
    return _laguerre_cached(int(n), to_fraction(alpha))


def laguerre_series(n: int, alpha) -> Poly:
    """Explicit sum  sum_k (-1)^k binom(n+alpha, n-k) z^k / k!.

    Independent of the recurrence; kept as a cross-check.
    """
    alpha = to_fraction(alpha)
    coeffs = []
    for k in range(n + 1):
        binom = Fraction(1)
        for j in range(1, n - k + 1):
            binom *= (alpha + k + j) / j
        coeffs.append((-1) ** k * binom / math.factorial(k))
    return Poly(coeffs)


def laguerre_ode_residual(n: int, alpha) -> Poly:
    """z L'' + (alpha + 1 - z) L' + n L; zero for a correct L_n^(alpha)."""
    alpha = to_fraction(alpha)
    y = laguerre(n, alpha)
    z = Poly.z()
    return z * y.deriv(2) + (alpha + 1 - z) * y.deriv() + n * y


def x1_laguerre(n: int, alpha) -> Poly:
    """X1 exceptional Laguerre polynomial as a three-term combination.

    hat L_n = n L_n - 2(n+alpha) L_{n-1} + (n+alpha) L_{n-2}
    """
    if n < 1:
        raise ValueError("X_1 family starts at degree 1")
    alpha = to_fraction(alpha)
    return (
        n * laguerre(n, alpha)
        - 2 * (n + alpha) * laguerre(n - 1, alpha)
        + (n + alpha) * laguerre(n - 2, alpha)
    )


def x1_ode_residual(n: int, alpha) -> Poly:
    """Denominator-cleared residual of the X1 eigenvalue equation.

    z(z+a) y'' - (z-a)[(z+a+1) y' - y] + (n-1)(z+a) y
    """
    alpha = to_fraction(alpha)
    y = x1_laguerre(n, alpha)
    z = Poly.z()
    g = z + alpha
    return z * g * y.deriv(2) - (z - alpha) * ((z + alpha + 1) * y.deriv() - y) + (n - 1) * g * y


def laguerre_norm(n: int, alpha) -> float:
    """Gamma(n+alpha+1)/n!, the squared norm under z^alpha e^-z."""
    a = float(alpha)
    return math.exp(math.lgamma(n + a + 1) - math.lgamma(n + 1))


def x1_norm(n: int, alpha) -> float:
    """Gamma(n+alpha+1) / ((n+alpha-1) (n-1)!), squared X1 norm.

    Weight is z^alpha e^-z / (z+alpha)^2 on (0, inf).
    """
    if n < 1:
        raise ValueError("X_1 family starts at degree 1")
    a = float(alpha)
    if a <= 0:
        raise ValueError("x1_norm requires alpha > 0")
    return math.exp(math.lgamma(n + a + 1) - math.lgamma(n)) / (n + a - 1)
