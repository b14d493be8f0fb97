"""Radial oscillator potentials, rational extensions and their SUSY structure.

Everything is carried in the variable z = omega x^2 / 2.  A function of x
that is even in x is stored as r(z); an odd one as omega*x * r(z).  With
d/dx = omega x d/dz and (omega x)^2 = 2 omega z, products, quotients and
derivatives of such functions stay in this form, so every identity below
reduces to exact rational-function arithmetic in z.

Units: hbar = 2m = 1.  alpha = l + 1/2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .eop import (
    Conventional,
    EOPoly,
    FirstOrder,
    SecondOrder,
    SeedKind,
    SSUSYCase,
    Source,
    eop_from_source,
    g_poly,
    ground_state_poly,
    seed_poly,
)
from .orthopoly import laguerre
from .polycore import Poly, RationalFn, count_roots_positive, to_fraction

__all__ = [
    "OscParams",
    "WeightFactor",
    "SeedFunction",
    "ExtensionSpec",
    "ZRationalPotential",
    "XFunction",
    "SusyCase",
    "SSUSYPair",
    "oscillator_energy",
    "v_conventional",
    "v_rational_part",
    "v_extended",
    "seed_function",
    "first_order_extension",
    "second_order_extension",
    "extension_from_source",
    "superpotential_conventional",
    "superpotential_ext",
    "factorization_residual",
    "first_order_partner_residuals",
    "si_residual",
    "ssusy_pair",
    "partner_wavefunction_poly",
]


@dataclass(frozen=True)
class OscParams:
    omega: Fraction
    l: int

    def __post_init__(self):
        object.__setattr__(self, "omega", to_fraction(self.omega))
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if int(self.l) != self.l or self.l < 0:
            raise ValueError("l must be a nonnegative integer")

    @property
    def alpha(self) -> Fraction:
        return self.l + Fraction(1, 2)

    def with_l(self, l: int) -> "OscParams":
        return OscParams(self.omega, l)

    @property
    def ground_energy(self) -> Fraction:
        return self.omega * (self.alpha + 1)


def oscillator_energy(params: OscParams, nu: int) -> Fraction:
    """omega (2 nu + l + 3/2)."""
    return params.omega * (2 * nu + params.l + Fraction(3, 2))


@dataclass(frozen=True)
class WeightFactor:
    """z^zpow * exp(expcoef * z)."""

    zpow: Fraction
    expcoef: Fraction

    def log_deriv(self) -> RationalFn:
        # d/dz log(z^a e^{bz}) = a/z + b
        return RationalFn(Poly([self.zpow, self.expcoef]), Poly.z())


class XFunction:
    """(omega x)^parity * r(z) with parity in {0, 1}."""

    __slots__ = ("parity", "r", "omega")

    def __init__(self, parity: int, r, omega):
        self.parity = parity
        self.r = r if isinstance(r, RationalFn) else RationalFn(r)
        self.omega = to_fraction(omega)

    def _lift(self, other) -> "XFunction":
        if isinstance(other, XFunction):
            return other
        return XFunction(0, other, self.omega)

    def __add__(self, other) -> "XFunction":
        o = self._lift(other)
        if o.parity != self.parity:
            if o.r.is_identically_zero():
                return self
            if self.r.is_identically_zero():
                return o
            raise ValueError("adding functions of different parity in x")
        return XFunction(self.parity, self.r + o.r, self.omega)

    __radd__ = __add__

    def __neg__(self) -> "XFunction":
        return XFunction(self.parity, -self.r, self.omega)

    def __sub__(self, other) -> "XFunction":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "XFunction":
        return self._lift(other) - self

    def __mul__(self, other) -> "XFunction":
        o = self._lift(other)
        r = self.r * o.r
        if self.parity and o.parity:
            return XFunction(0, r * Poly([0, 2 * self.omega]), self.omega)
        return XFunction(self.parity ^ o.parity, r, self.omega)

    __rmul__ = __mul__

    def inverse(self) -> "XFunction":
        if self.parity:
            return XFunction(1, RationalFn(1) / (self.r * Poly([0, 2 * self.omega])), self.omega)
        return XFunction(0, RationalFn(1) / self.r, self.omega)

    def __truediv__(self, other) -> "XFunction":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> "XFunction":
        return self._lift(other) * self.inverse()

    def deriv(self) -> "XFunction":
        """d/dx."""
        rd = self.r.deriv()
        if self.parity:
            return XFunction(0, self.omega * (self.r + Poly([0, 2]) * rd), self.omega)
        return XFunction(1, rd, self.omega)

    def is_identically_zero(self) -> bool:
        return self.r.is_identically_zero()

    def even_part(self) -> RationalFn:
        if self.parity:
            raise ValueError("function is odd in x")
        return self.r

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        w = float(self.omega)
        val = self.r.eval_float(0.5 * w * x**2)
        return w * x * val if self.parity else val

    def __repr__(self) -> str:
        head = "omega*x * " if self.parity else ""
        return f"XFunction({head}{self.r!r}, omega={self.omega})"


@dataclass(frozen=True)
class ZRationalPotential:
    """V(x) = rfn(z) at z = omega x^2 / 2."""

    rfn: RationalFn
    omega: Fraction

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.rfn.eval_float(0.5 * float(self.omega) * x**2)

    def at_z(self, z) -> Fraction:
        return self.rfn(z)

    def as_xfunction(self) -> XFunction:
        return XFunction(0, self.rfn, self.omega)

    def shifted(self, c) -> "ZRationalPotential":
        return ZRationalPotential(self.rfn + to_fraction(c), self.omega)

    def __sub__(self, other: "ZRationalPotential") -> RationalFn:
        return self.rfn - other.rfn


def _zpoly(*coeffs) -> Poly:
    return Poly(coeffs)


def v_conventional(params: OscParams) -> ZRationalPotential:
    """(omega/2) [z + l(l+1)/z]."""
    w, l = params.omega, params.l
    rfn = RationalFn(_zpoly(l * (l + 1), 0, 1), Poly.z()) * (w / 2)
    return ZRationalPotential(rfn, w)


def _require_regular(g: Poly, what: str = "extension has a pole on (0,inf)") -> None:
    if g.is_zero():
        raise ValueError("g-polynomial is identically zero")
    if count_roots_positive(g) > 0:
        raise ValueError(what)


def v_rational_part(g: Poly, omega, check: bool = True) -> ZRationalPotential:
    """-2 omega { g'/g + 2z [g''/g - (g'/g)^2] }."""
    omega = to_fraction(omega)
    if check:
        _require_regular(g, "singular extension: g has a root on (0,inf)")
    lg = RationalFn(g.deriv(), g)
    rfn = -2 * omega * (lg + Poly([0, 2]) * (RationalFn(g.deriv(2), g) - lg * lg))
    return ZRationalPotential(rfn, omega)


def v_extended(params: OscParams, g: Poly, check: bool = True) -> ZRationalPotential:
    rat = v_rational_part(g, params.omega, check=check)
    return ZRationalPotential(v_conventional(params).rfn + rat.rfn, params.omega)


@dataclass(frozen=True)
class SeedFunction:
    kind: SeedKind
    params: OscParams
    m: int
    weight: WeightFactor
    poly: Poly
    energy: Fraction

    def log_deriv_x(self) -> XFunction:
        """phi'/phi as an odd function of x."""
        r = self.weight.log_deriv() + RationalFn(self.poly.deriv(), self.poly)
        return XFunction(1, r, self.params.omega)


def seed_function(kind: SeedKind, params: OscParams, m: int) -> SeedFunction:
    """Nodeless seed of V_l with nonnormalizable inverse (isospectral branch)."""
    a, w = params.alpha, params.omega
    if m < 1:
        raise ValueError("seed index m must be >= 1")
    if kind is SeedKind.TYPE_I:
        weight = WeightFactor((2 * a + 1) / 4, Fraction(1, 2))
        poly = laguerre(m, a).compose_affine(-1)
        energy = -w * (a + 2 * m + 1)
    else:
        if m > params.l:
            raise ValueError(
                f"normalizable inverse risk: outside validity range (type II needs m <= l, got m={m}, l={params.l})"
            )
        weight = WeightFactor(-(2 * a - 1) / 4, Fraction(-1, 2))
        poly = laguerre(m, -a)
        energy = -w * (a - 2 * m - 1)
    if not energy < params.ground_energy:
        raise ValueError("seed energy not below the ground state")
    return SeedFunction(kind, params, m, weight, poly, energy)


@dataclass(frozen=True)
class ExtensionSpec:
    """A pole-free rational extension V_{l,ext} built from a g-polynomial."""

    params: OscParams
    g: Poly
    mu: int
    provenance: Source
    shiftC: Fraction = Fraction(0)

    def __post_init__(self):
        if self.g.degree != self.mu:
            raise ValueError(f"deg g = {self.g.degree} but mu = {self.mu}")
        _require_regular(self.g)

    def potential(self) -> ZRationalPotential:
        return v_extended(self.params, self.g, check=False)

    def g_plus(self) -> Poly:
        return ground_state_poly(self.provenance, self.params.alpha)

    def superpotential(self) -> RationalFn:
        return superpotential_ext(self.params, self.g, self.g_plus())


def extension_from_source(params: OscParams, source: Source, shiftC=0) -> ExtensionSpec:
    """Extension from any g-family; only pole-freeness is enforced."""
    g, mu = g_poly(source, params.alpha)
    return ExtensionSpec(params, g, mu, source, to_fraction(shiftC))


def first_order_extension(kind: SeedKind, params: OscParams, m: int) -> ExtensionSpec:
    """V_{l,ext} as first-order partner of V_{l-1} (type I) or V_{l+1} (type II)."""
    if kind is SeedKind.TYPE_I:
        if params.l < 1:
            raise ValueError("type I first-order route needs l >= 1 (seed at l-1)")
        seed_function(kind, params.with_l(params.l - 1), m)
        shift = -params.omega
    else:
        try:
            seed_function(kind, params.with_l(params.l + 1), m)
        except ValueError as exc:
            raise ValueError(f"{exc}; seed lives on V_(l+1) for target l={params.l}") from None
        shift = params.omega
    return extension_from_source(params, FirstOrder(kind, m), shift)


_SSUSY_SHIFT = {SSUSYCase.I_I: -2, SSUSYCase.II_II: 2, SSUSYCase.I_II: 0}


def _ssusy_seeds(case: SSUSYCase, params: OscParams, m1: int, m2: int) -> tuple:
    l = params.l
    if case is SSUSYCase.I_I:
        if not 0 < m1 < m2:
            raise ValueError("case I_I requires 0 < m1 < m2")
        if l < 2:
            raise ValueError("case I_I starts from V_{l-2}: needs l >= 2")
        start = params.with_l(l - 2)
        return start, seed_function(SeedKind.TYPE_I, start, m1), seed_function(SeedKind.TYPE_I, start, m2)
    if case is SSUSYCase.II_II:
        if not 0 < m1 < m2:
            raise ValueError("case II_II requires 0 < m1 < m2")
        start = params.with_l(l + 2)
        return start, seed_function(SeedKind.TYPE_II, start, m1), seed_function(SeedKind.TYPE_II, start, m2)
    return params, seed_function(SeedKind.TYPE_I, params, m1), seed_function(SeedKind.TYPE_II, params, m2)


def second_order_extension(case: SSUSYCase, params: OscParams, m1: int, m2: int) -> ExtensionSpec:
    """V_{l,ext} from a reducible second-order construction (seed ranges checked)."""
    _ssusy_seeds(case, params, m1, m2)
    return extension_from_source(params, SecondOrder(case, m1, m2), _SSUSY_SHIFT[case] * params.omega)


def superpotential_conventional(params: OscParams) -> RationalFn:
    """u(z) with W_l = omega x u: 1/2 - (2 alpha + 1)/(4z)."""
    a = params.alpha
    return RationalFn(Poly([-(2 * a + 1) / 4, Fraction(1, 2)]), Poly.z())


def superpotential_ext(params: OscParams, g: Poly, g_plus: Optional[Poly] = None) -> RationalFn:
    """u(z) with bar W_l = omega x u for the extension generated by g.

    ``g_plus`` is the ground-state polynomial (proportional to g^(alpha+1));
    it may be omitted only for constant g.
    """
    if g_plus is None:
        if not g.is_constant():
            raise ValueError("g_plus is required for a non-constant g")
        g_plus = g
    _require_regular(g, "singular g")
    _require_regular(g_plus, "singular g at alpha+1")
    corr = RationalFn(g_plus.deriv(), g_plus) - RationalFn(g.deriv(), g)
    return superpotential_conventional(params) - corr


def _w2_minus_wd(u: RationalFn, omega: Fraction, sign: int) -> RationalFn:
    """W^2 - sign*W' for W = omega x u, as a function of z."""
    w = XFunction(1, u, omega)
    return (w * w - sign * w.deriv()).even_part()


def factorization_residual(spec: ExtensionSpec) -> RationalFn:
    """V_ext - E_0 - (bar W^2 - bar W')  (identically zero)."""
    p = spec.params
    u = spec.superpotential()
    return spec.potential().rfn - p.ground_energy - _w2_minus_wd(u, p.omega, +1)


def si_residual(params: OscParams, source: Source, require_regular: bool = True) -> RationalFn:
    """bar W_l^2 + bar W_l' - [V_{l+1,ext} - E_0^(l+1)] - 2 omega  (identically zero).

    The level-(l+1) extension uses g^(alpha+1) of the same family.  With
    ``require_regular=False`` the identity is checked purely algebraically,
    even where g has a root on the half-line.
    """
    a, w = params.alpha, params.omega
    up = params.with_l(params.l + 1)
    g, _ = g_poly(source, a)
    g_plus = ground_state_poly(source, a)
    g_next, _ = g_poly(source, a + 1)
    if require_regular:
        for poly in (g, g_plus, g_next):
            _require_regular(poly, "singular g at level l or l+1")
    corr = RationalFn(g_plus.deriv(), g_plus) - RationalFn(g.deriv(), g)
    u = superpotential_conventional(params) - corr
    lhs = _w2_minus_wd(u, w, -1)
    v_next = v_extended(up, g_next, check=False).rfn
    return lhs - (v_next - up.ground_energy) - 2 * w


def first_order_partner_residuals(kind: SeedKind, params: OscParams, m: int) -> dict:
    """Exact checks of one first-order step producing V_{l,ext}.

    ``seed``: W^2 - W' + E - V_{l'} (the seed solves the starting equation);
    ``partner``: W^2 + W' + E - (V_{l,ext} + C).
    """
    spec = first_order_extension(kind, params, m)
    lp = params.l - 1 if kind is SeedKind.TYPE_I else params.l + 1
    start = params.with_l(lp)
    phi = seed_function(kind, start, m)
    w = -phi.log_deriv_x()
    v_plus = (w * w - w.deriv()).even_part() + phi.energy
    v_minus = (w * w + w.deriv()).even_part() + phi.energy
    return {
        "seed": v_plus - v_conventional(start).rfn,
        "partner": v_minus - spec.potential().rfn - spec.shiftC,
    }


class SusyCase(enum.Enum):
    """First-order SUSY branches; only the isospectral one is constructed."""

    DELETE_GROUND = "i"
    ISOSPECTRAL = "ii"
    ADD_LEVEL = "iii"


@dataclass
class SSUSYPair:
    case: SSUSYCase
    params: OscParams
    m1: int
    m2: int
    mu: int
    g: Poly
    V1: ZRationalPotential
    V2: ZRationalPotential
    p: XFunction
    q: XFunction
    c: Fraction
    E1: Fraction
    E2: Fraction
    shiftC: Fraction
    intermediate: ZRationalPotential
    residuals: dict = field(default_factory=dict)

    @property
    def p_u(self) -> RationalFn:
        """p = omega x * p_u(z)."""
        return self.p.r

    @property
    def energy_shift(self) -> Fraction:
        """Offset of V2 levels from omega(2 nu + l + 3/2)."""
        return -(self.E1 + self.E2) / 2 + self.shiftC


def ssusy_pair(case: SSUSYCase, params: OscParams, m1: int, m2: int, swap: bool = False) -> SSUSYPair:
    """Reducible second-order SUSY pair V1 -> V2 with all gluing identities.

    ``residuals`` holds exact RationalFns that must vanish:
    ``v2_v1_4dp`` (V2 - V1 - 4p'), ``v1_from_p`` / ``v2_from_p`` (potentials
    rebuilt from p and c), ``p_two_forms`` (both Wronskian expressions of p),
    ``q_factorized`` (q from p versus the product of first-order factors) and
    ``intermediate_const`` (derivative of intermediate minus first-order
    V_{l +- 1, ext}).
    """
    w = params.omega
    start, phi1, phi2 = _ssusy_seeds(case, params, m1, m2)
    g, mu = g_poly(SecondOrder(case, m1, m2), params.alpha)
    _require_regular(g, "extension invalid: g_mu has a root on (0,inf)")
    if swap:
        phi1, phi2 = phi2, phi1
    E1, E2 = phi1.energy, phi2.energy
    c = E1 - E2
    shiftC = _SSUSY_SHIFT[case] * w

    L1, L2 = phi1.log_deriv_x(), phi2.log_deriv_x()
    D = L2 - L1  # Wr(phi1, phi2) / (phi1 phi2)
    p = -c / (2 * D)
    dlogD = D.deriv() / D
    p_alt = -(L1 + L2 + dlogD) / 2
    W = -L1
    W_tilde = -(L2 + dlogD)

    mean = (E1 + E2) / 2
    V1 = v_conventional(start).shifted(-mean)
    V2 = ZRationalPotential(
        v_extended(params, g, check=False).rfn - mean + shiftC, w
    )
    dp = p.deriv()
    common = p * p + p.deriv().deriv() / (2 * p) - (dp / (2 * p)) * (dp / (2 * p)) + (c * c / 16) / (p * p)
    q = -dp + p * p - p.deriv().deriv() / (2 * p) + (dp / (2 * p)) * (dp / (2 * p)) - (c * c / 16) / (p * p)
    q_fact = W * W_tilde - W_tilde.deriv()

    v_minus = (W * W + W.deriv()).even_part() + E1
    if phi1.kind is SeedKind.TYPE_I:
        mid_params = start.with_l(start.l + 1)
    else:
        mid_params = start.with_l(start.l - 1)
    g_mid = seed_poly(phi1.kind, mid_params.alpha, phi1.m)
    v_mid_first = v_extended(mid_params, g_mid, check=False).rfn
    intermediate = ZRationalPotential(v_minus + c / 2, w)

    residuals = {
        "v2_v1_4dp": V2.rfn - V1.rfn - (4 * dp).even_part(),
        "v1_from_p": V1.rfn - (-2 * dp + common).even_part(),
        "v2_from_p": V2.rfn - (2 * dp + common).even_part(),
        "p_two_forms": (p - p_alt).r,
        "q_factorized": (q - q_fact).even_part(),
        "intermediate_const": (v_minus - v_mid_first).deriv(),
    }
    return SSUSYPair(
        case, params, m1, m2, mu, g, V1, V2, p, q, c, E1, E2, shiftC, intermediate, residuals
    )


def partner_wavefunction_poly(params: OscParams, spec: ExtensionSpec, nu: int) -> EOPoly:
    """Polynomial part y of the bound state eta_l(z) y(z) / g(z)."""
    if spec.params != params:
        raise ValueError("spec was built for different oscillator parameters")
    return eop_from_source(spec.provenance, params.alpha, nu)
