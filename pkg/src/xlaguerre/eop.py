"""Exceptional Laguerre polynomials from first- and second-order SUSY operators.

The g-polynomials generating rational extensions, the X_m (types I/II) and
X_{m1,m2} (cases I,I / II,II / I,II) families, their eigenvalue equation and
the bookkeeping needed to group g-polynomials that coincide.

Normalization: every EOP has highest term (-z)^n / [(n - mu)! prod m_i!].
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .orthopoly import laguerre
from .polycore import Poly, to_fraction, wronskian2

__all__ = [
    "SeedKind",
    "SSUSYCase",
    "Family",
    "SeedIndex",
    "Conventional",
    "FirstOrder",
    "SecondOrder",
    "EOPoly",
    "CoincidenceClass",
    "seed_poly",
    "g_mu_ssusy",
    "g_poly",
    "degree_mu",
    "eop_first_order",
    "eop_second_order",
    "eop_from_source",
    "eop_ode_residual",
    "ground_state_poly",
    "proportionality_constant",
    "candidate_sources",
    "detect_coincidences",
    "distinct_counts",
]


class SeedKind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class SSUSYCase(enum.Enum):
    I_I = "I_I"
    II_II = "II_II"
    I_II = "I_II"


class Family(enum.Enum):
    CLASSICAL = "L"
    L1 = "L1"
    L2 = "L2"
    LI_I = "LI_I"
    LII_II = "LII_II"
    LI_II = "LI_II"
    GENERAL = "General"


@dataclass(frozen=True)
class SeedIndex:
    kind: SeedKind
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"seed index m must be >= 1, got {self.m}")


# Provenance of a g-polynomial family g^(alpha)(z); alpha is supplied later.
@dataclass(frozen=True)
class Conventional:
    @property
    def label(self) -> str:
        return "conventional"


@dataclass(frozen=True)
class FirstOrder:
    kind: SeedKind
    m: int

    @property
    def label(self) -> str:
        return f"first:{self.kind.value}:{self.m}"


@dataclass(frozen=True)
class SecondOrder:
    case: SSUSYCase
    m1: int
    m2: int

    @property
    def label(self) -> str:
        return f"second:{self.case.value}:{self.m1},{self.m2}"


Source = Union[Conventional, FirstOrder, SecondOrder]


@dataclass(frozen=True)
class EOPoly:
    """A constructed exceptional (or classical, mu = 0) Laguerre polynomial."""

    family: Family
    alpha: Fraction
    indices: tuple
    mu: int
    n: int
    poly: Poly = field(compare=False)

    @property
    def nu(self) -> int:
        return self.n - self.mu

    def expected_leading(self) -> Fraction:
        denom = math.factorial(self.n - self.mu)
        for s in self.indices:
            denom *= math.factorial(s.m)
        return Fraction((-1) ** self.n, denom)


def seed_poly(kind: SeedKind, alpha, m: int) -> Poly:
    """First-order g-polynomial: L^(alpha-1)_m(-z) (I) or L^(-alpha-1)_m(z) (II)."""
    if m < 1:
        raise ValueError("seed index m must be >= 1")
    alpha = to_fraction(alpha)
    if kind is SeedKind.TYPE_I:
        return laguerre(m, alpha - 1).compose_affine(-1)
    return laguerre(m, -alpha - 1)


def g_mu_ssusy(case: SSUSYCase, alpha, m1: int, m2: int) -> tuple:
    """Second-order g-polynomial and its degree mu, from polynomial Wronskians."""
    alpha = to_fraction(alpha)
    if case in (SSUSYCase.I_I, SSUSYCase.II_II):
        if not 0 < m1 < m2:
            raise ValueError(f"case {case.value} requires 0 < m1 < m2, got ({m1}, {m2})")
        if case is SSUSYCase.I_I:
            f1 = laguerre(m1, alpha - 2).compose_affine(-1)
            f2 = laguerre(m2, alpha - 2).compose_affine(-1)
        else:
            f1 = laguerre(m1, -alpha - 2)
            f2 = laguerre(m2, -alpha - 2)
        return wronskian2(f1, f2), m1 + m2 - 1
    if m1 < 1 or m2 < 1:
        raise ValueError(f"case I_II requires m1, m2 >= 1, got ({m1}, {m2})")
    z = Poly.z()
    f1 = laguerre(m1, alpha).compose_affine(-1)
    f2 = laguerre(m2, -alpha)
    return z * wronskian2(f1, f2) - (z + alpha) * f1 * f2, m1 + m2 + 1


def g_poly(source: Source, alpha) -> tuple:
    """(g, mu) for any provenance; the conventional potential has g = 1."""
    if isinstance(source, Conventional):
        return Poly.one(), 0
    if isinstance(source, FirstOrder):
        return seed_poly(source.kind, alpha, source.m), source.m
    return g_mu_ssusy(source.case, alpha, source.m1, source.m2)


def degree_mu(q: int, k: int, m: Sequence[int]) -> int:
    """Lowest EOP degree for a k-step extension with q type I seeds.

    ``m`` lists the q type I indices first, then the k - q type II ones;
    each group must be strictly increasing.
    """
    m = list(m)
    if not 0 <= q <= k:
        raise ValueError("need 0 <= q <= k")
    if len(m) != k:
        raise ValueError(f"expected {k} indices, got {len(m)}")
    if any(mi < 1 for mi in m):
        raise ValueError("indices must be >= 1")
    for part in (m[:q], m[q:]):
        if any(b <= a for a, b in zip(part, part[1:])):
            raise ValueError("indices must be strictly increasing within each type")
    return sum(m) - q * (q - 1) // 2 - (k - q) * (k - q - 1) // 2 + q * (k - q)


def _op_type_i(g: Poly, y: Poly) -> Poly:
    # g (d/dz - 1) y - g' y
    return g * (y.deriv() - y) - g.deriv() * y


def _op_type_ii(g: Poly, y: Poly, alpha: Fraction) -> Poly:
    # g (z d/dz + alpha + 1) y - z g' y
    z = Poly.z()
    return g * (z * y.deriv() + (alpha + 1) * y) - z * g.deriv() * y


def eop_first_order(kind: SeedKind, alpha, m: int, nu: int) -> EOPoly:
    """X_m Laguerre EOP of degree m + nu (families L1 / L2)."""
    if nu < 0:
        raise ValueError("nu must be a nonnegative integer")
    alpha = to_fraction(alpha)
    g = seed_poly(kind, alpha, m)
    if kind is SeedKind.TYPE_I:
        y = _op_type_i(g, laguerre(nu, alpha - 1)).scale((-1) ** (m - 1))
        family = Family.L1
    else:
        denom = alpha + nu + 1 - m
        if denom == 0:
            raise ValueError("degenerate normalization")
        y = _op_type_ii(g, laguerre(nu, alpha + 1), alpha).scale(1 / denom)
        family = Family.L2
    return EOPoly(family, alpha, (SeedIndex(kind, m),), m, m + nu, y)


def eop_second_order(case: SSUSYCase, alpha, m1: int, m2: int, nu: int) -> EOPoly:
    """X_{m1,m2} Laguerre EOP of degree mu + nu from an X_{m1} one.

    The intermediate X_{m1} polynomial lives at alpha - 1 (case I,I) or
    alpha + 1 (II,II and I,II); the operator's polynomial division must be
    exact.
    """
    if nu < 0:
        raise ValueError("nu must be a nonnegative integer")
    alpha = to_fraction(alpha)
    g, mu = g_mu_ssusy(case, alpha, m1, m2)
    if case is SSUSYCase.I_I:
        inner = eop_first_order(SeedKind.TYPE_I, alpha - 1, m1, nu).poly
        num = _op_type_i(g, inner)
        divisor = seed_poly(SeedKind.TYPE_I, alpha - 1, m1)
        factor = Fraction((-1) ** m2, m2 - m1)
        family, kinds = Family.LI_I, (SeedKind.TYPE_I, SeedKind.TYPE_I)
    elif case is SSUSYCase.II_II:
        inner = eop_first_order(SeedKind.TYPE_II, alpha + 1, m1, nu).poly
        num = _op_type_ii(g, inner, alpha)
        divisor = seed_poly(SeedKind.TYPE_II, alpha + 1, m1)
        denom = (alpha + nu + 2 - m2) * (m2 - m1)
        if denom == 0:
            raise ValueError("degenerate normalization")
        factor = -1 / denom
        family, kinds = Family.LII_II, (SeedKind.TYPE_II, SeedKind.TYPE_II)
    else:
        inner = eop_first_order(SeedKind.TYPE_I, alpha + 1, m1, nu).poly
        num = _op_type_ii(g, inner, alpha)
        divisor = seed_poly(SeedKind.TYPE_I, alpha + 1, m1)
        denom = alpha + nu - m2
        if denom == 0:
            raise ValueError("degenerate normalization")
        factor = 1 / denom
        family, kinds = Family.LI_II, (SeedKind.TYPE_I, SeedKind.TYPE_II)
    quot, rem = num.divmod(divisor)
    if not rem.is_zero():
        raise ArithmeticError("factorization failure: nonzero remainder in operator division")
    y = quot.scale(factor)
    indices = (SeedIndex(kinds[0], m1), SeedIndex(kinds[1], m2))
    return EOPoly(family, alpha, indices, mu, mu + nu, y)


def eop_from_source(source: Source, alpha, nu: int) -> EOPoly:
    """Dispatch to the constructor matching a g-polynomial provenance."""
    alpha = to_fraction(alpha)
    if isinstance(source, Conventional):
        if nu < 0:
            raise ValueError("nu must be a nonnegative integer")
        return EOPoly(Family.CLASSICAL, alpha, (), 0, nu, laguerre(nu, alpha))
    if isinstance(source, FirstOrder):
        return eop_first_order(source.kind, alpha, source.m, nu)
    return eop_second_order(source.case, alpha, source.m1, source.m2, nu)


def ground_state_poly(source: Source, alpha) -> Poly:
    """The nu = 0 polynomial, proportional to g^(alpha+1)."""
    return eop_from_source(source, alpha, 0).poly


def eop_ode_residual(g: Poly, mu: int, alpha, y: Poly, n: int) -> Poly:
    """Denominator-cleared residual of the EOP eigenvalue equation.

    z g y'' + (alpha+1-z) g y' - 2z g' y' + [(z-alpha) g' + z g''] y - (mu-n) g y
    """
    alpha = to_fraction(alpha)
    z = Poly.z()
    gd, gdd = g.deriv(), g.deriv(2)
    yd = y.deriv()
    return (
        z * g * y.deriv(2)
        + (alpha + 1 - z) * g * yd
        - 2 * z * gd * yd
        + ((z - alpha) * gd + z * gdd) * y
        - (mu - n) * g * y
    )


def proportionality_constant(p: Poly, q: Poly) -> Optional[Fraction]:
    """c with p == c*q exactly, or None if not proportional."""
    if p.is_zero() or q.is_zero() or p.degree != q.degree:
        return None
    c = p.leading / q.leading
    return c if p == q.scale(c) else None


def _proportional(p: Poly, q: Poly) -> bool:
    if p.degree != q.degree:
        return False
    n = p.degree + 1
    return all(p[i] * q[j] == p[j] * q[i] for i in range(n) for j in range(i + 1, n))


def candidate_sources(max_mu: int) -> list:
    """All first- and second-order g-provenances with degree 1..max_mu."""
    out = []
    for mu in range(1, max_mu + 1):
        out.append(FirstOrder(SeedKind.TYPE_I, mu))
        out.append(FirstOrder(SeedKind.TYPE_II, mu))
        for m1 in range(1, mu + 1):
            m2 = mu + 1 - m1
            if m1 < m2:
                out.append(SecondOrder(SSUSYCase.I_I, m1, m2))
                out.append(SecondOrder(SSUSYCase.II_II, m1, m2))
        for m1 in range(1, mu):
            m2 = mu - 1 - m1
            if m2 >= 1:
                out.append(SecondOrder(SSUSYCase.I_II, m1, m2))
    return out


@dataclass(frozen=True)
class CoincidenceClass:
    degree: int
    representative: Poly
    members: tuple


def _alpha_samples(count: int) -> list:
    # generic rationals, far from the integers where families degenerate
    return [Fraction(1009, 7) + Fraction(31 * j, 11) for j in range(count)]


def detect_coincidences(alpha=None, max_mu: int = 3) -> list:
    """Group g-polynomials of degree <= max_mu by proportionality.

    With ``alpha=None`` the test is symbolic in alpha: coefficients are
    polynomials in alpha of degree <= mu + 1, so pairwise cross products have
    degree <= 2 mu + 2 and vanish identically iff they vanish at 2 mu + 3
    distinct sample points.  Representatives are monic, evaluated at
    ``alpha`` or at the first sample.
    """
    if max_mu > 6:
        raise ValueError("detect_coincidences is limited to max_mu <= 6")
    sources = candidate_sources(max_mu)
    if alpha is None:
        samples = _alpha_samples(2 * max_mu + 3)
    else:
        samples = [to_fraction(alpha)]
    polys = {s: [g_poly(s, a)[0] for a in samples] for s in sources}
    classes: list = []
    for s in sources:
        for members in classes:
            ref = members[0]
            if all(_proportional(p, q) for p, q in zip(polys[s], polys[ref])):
                members.append(s)
                break
        else:
            classes.append([s])
    out = []
    for members in classes:
        rep = polys[members[0]][0].monic()
        labels = tuple(sorted(m.label for m in members))
        out.append(CoincidenceClass(rep.degree, rep, labels))
    out.sort(key=lambda c: (c.degree, c.representative.coeffs))
    return out


def distinct_counts(classes: Sequence[CoincidenceClass]) -> dict:
    counts: dict = {}
    for c in classes:
        counts[c.degree] = counts.get(c.degree, 0) + 1
    return dict(sorted(counts.items()))
