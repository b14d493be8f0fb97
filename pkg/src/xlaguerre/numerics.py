"""Floating-point layer: half-line quadrature, bound states, wavefunctions."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence, Union

import numpy as np
from scipy.linalg import solve_banded

from .eop import EOPoly
from .polycore import Poly
from .susy import ExtensionSpec, OscParams, ZRationalPotential, partner_wavefunction_poly

__all__ = [
    "NumericsConfig",
    "DEFAULTS",
    "QuadResult",
    "GridSpec",
    "Level",
    "SpectrumReport",
    "integrate_halfline",
    "integrate_interval",
    "sturm_count",
    "tridiag_eigvals",
    "tridiag_eigvec",
    "fd_hamiltonian",
    "default_grid",
    "bound_states",
    "ground_state_overlap",
    "Wavefunction",
    "wavefunction",
]


@dataclass(frozen=True)
class NumericsConfig:
    quad_tol: float = 1e-9
    spectrum_tol: float = 1e-4
    overlap_tol: float = 1e-4
    quad_max_intervals: int = 4000
    x_min_scale: float = 1e-8
    headroom: float = 40.0
    points: int = 801
    refinement_levels: int = 3


DEFAULTS = NumericsConfig()


class QuadResult(NamedTuple):
    value: float
    error: float
    converged: bool
    intervals: int


_GL_LO = np.polynomial.legendre.leggauss(15)
_GL_HI = np.polynomial.legendre.leggauss(31)


def _panel(g: Callable, a: float, b: float) -> tuple:
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    lo = half * np.dot(_GL_LO[1], g(mid + half * _GL_LO[0]))
    hi = half * np.dot(_GL_HI[1], g(mid + half * _GL_HI[0]))
    return hi, abs(hi - lo)


def integrate_interval(g: Callable, a: float, b: float, tol: float = DEFAULTS.quad_tol,
                       max_intervals: int = DEFAULTS.quad_max_intervals) -> QuadResult:
    """Globally adaptive Gauss-Legendre (15/31 pair) on [a, b].

    Subdivides the panel with the largest error estimate until the summed
    estimate is below ``tol * max(1, |value|)``.  Endpoints are never
    evaluated.
    """
    value, err = _panel(g, a, b)
    heap = [(-err, a, b, value)]
    total, total_err = value, err
    while total_err > tol * max(1.0, abs(total)):
        if len(heap) >= max_intervals:
            return QuadResult(float(total), float(total_err), False, len(heap))
        neg_err, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = _panel(g, lo, mid)
        v2, e2 = _panel(g, mid, hi)
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
    # re-sum to shed accumulated cancellation error
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return QuadResult(float(total), float(total_err), True, len(heap))


def integrate_halfline(f: Callable, tol: float = DEFAULTS.quad_tol,
                       max_intervals: int = DEFAULTS.quad_max_intervals) -> QuadResult:
    """Integral of f over (0, inf) through z = t / (1 - t).

    ``f`` must accept numpy arrays.  Non-finite integrand values produced by
    overflow deep in the tail (t -> 1) are treated as zero; the integrand is
    assumed to decay there.
    """

    def g(t):
        one_minus = 1.0 - t
        zz = t / one_minus
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            val = np.asarray(f(zz), dtype=float) / one_minus**2
        return np.where(np.isfinite(val), val, 0.0)

    return integrate_interval(g, 0.0, 1.0, tol, max_intervals)


# --- symmetric tridiagonal eigenvalues by Sturm counts ---------------------

def sturm_count(d: np.ndarray, e: np.ndarray, shifts) -> np.ndarray:
    """Number of eigenvalues below each shift (vectorized over shifts).

    ``d`` is the diagonal (length n), ``e`` the off-diagonal (length n-1).
    """
    shifts = np.atleast_1d(np.asarray(shifts, dtype=float))
    e2 = np.concatenate(([0.0], np.asarray(e, dtype=float) ** 2))
    scale = max(np.max(np.abs(d)), np.max(np.abs(e)) if len(e) else 0.0, 1.0)
    tiny = np.finfo(float).eps * scale
    count = np.zeros(shifts.shape, dtype=np.int64)
    q = np.ones_like(shifts)
    for i in range(len(d)):
        q = d[i] - shifts - e2[i] / q
        q = np.where(q == 0.0, -tiny, q)
        count += q < 0.0
    return count


def _gershgorin(d: np.ndarray, e: np.ndarray) -> tuple:
    r = np.zeros_like(d)
    ae = np.abs(e)
    r[:-1] += ae
    r[1:] += ae
    return float(np.min(d - r)), float(np.max(d + r))


def tridiag_eigvals(d, e, k: int, tol: float = 1e-12, sections: int = 16) -> np.ndarray:
    """Lowest ``k`` eigenvalues of a symmetric tridiagonal matrix.

    Multisection on the Sturm count: each sweep evaluates ``sections - 1``
    interior shifts per wanted eigenvalue at once.
    """
    d = np.asarray(d, dtype=float)
    e = np.asarray(e, dtype=float)
    k = min(k, len(d))
    lo_all, hi_all = _gershgorin(d, e)
    width = hi_all - lo_all
    lo_all -= 1e-12 * width + 1e-300
    hi_all += 1e-12 * width + 1e-300
    lo = np.full(k, lo_all)
    hi = np.full(k, hi_all)
    idx = np.arange(k)
    frac = np.arange(1, sections) / sections
    while True:
        active = (hi - lo) > tol * np.maximum(1.0, np.maximum(np.abs(lo), np.abs(hi)))
        if not active.any():
            break
        shifts = lo[active, None] + (hi - lo)[active, None] * frac[None, :]
        counts = sturm_count(d, e, shifts.ravel()).reshape(shifts.shape)
        for row, j in enumerate(idx[active]):
            # eigenvalue j (0-based) lies where count passes j
            below = counts[row] <= j
            n_below = int(below.sum())
            new_lo = shifts[row, n_below - 1] if n_below > 0 else lo[j]
            new_hi = shifts[row, n_below] if n_below < len(frac) else hi[j]
            lo[j], hi[j] = new_lo, new_hi
    return 0.5 * (lo + hi)


def tridiag_eigvec(d, e, eigval: float, iterations: int = 3) -> np.ndarray:
    """Unit eigenvector for ``eigval`` by inverse iteration."""
    d = np.asarray(d, dtype=float)
    e = np.asarray(e, dtype=float)
    n = len(d)
    shift = eigval + 1e-10 * max(1.0, abs(eigval))
    ab = np.zeros((3, n))
    ab[0, 1:] = e
    ab[1] = d - shift
    ab[2, :-1] = e
    v = np.ones(n) / math.sqrt(n)
    for _ in range(iterations):
        v = solve_banded((1, 1), ab, v)
        v /= np.linalg.norm(v)
    return v


# --- finite-difference bound states --------------------------------------

@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    points: int = DEFAULTS.points
    refinement_levels: int = DEFAULTS.refinement_levels

    def __post_init__(self):
        if not 0 < self.x_min < self.x_max:
            raise ValueError("need 0 < x_min < x_max")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError("points must be odd and >= 3")
        if self.refinement_levels < 1:
            raise ValueError("refinement_levels must be >= 1")

    def nodes(self, level: int = 0) -> np.ndarray:
        n = (self.points - 1) * 2**level + 1
        return np.linspace(self.x_min, self.x_max, n)


PotentialLike = Union[ZRationalPotential, Callable]


def fd_hamiltonian(potential: PotentialLike, x: np.ndarray) -> tuple:
    """Diagonal and off-diagonal of -d^2/dx^2 + V on interior nodes (Dirichlet)."""
    h = x[1] - x[0]
    xi = x[1:-1]
    v = np.asarray(potential(xi), dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError("potential is not finite on the grid")
    d = 2.0 / h**2 + v
    e = np.full(len(xi) - 1, -1.0 / h**2)
    return d, e


def default_grid(potential: PotentialLike, omega: float, e_target: float,
                 config: NumericsConfig = DEFAULTS) -> GridSpec:
    """x_max where V >= e_target + headroom * omega, scanned outward."""
    omega = float(omega)
    x_min = config.x_min_scale * math.sqrt(2.0 / omega)
    target = e_target + config.headroom * omega
    x = math.sqrt(2.0 / omega)
    while float(potential(np.array([x]))[0]) < target or x < 4 * math.sqrt(2.0 / omega):
        x *= 1.1
        if x > 1e6:
            raise ValueError("potential does not confine")
    return GridSpec(x_min, x, config.points, config.refinement_levels)


@dataclass
class Level:
    index: int
    numeric: float
    analytic: Optional[float]
    abs_error: Optional[float]
    converged: bool


@dataclass
class SpectrumReport:
    levels: list
    grid: GridSpec
    raw: list = field(default_factory=list)

    def numeric(self) -> np.ndarray:
        return np.array([lv.numeric for lv in self.levels])

    def max_error(self) -> float:
        errs = [lv.abs_error for lv in self.levels if lv.abs_error is not None]
        return max(errs) if errs else float("nan")

    def to_dict(self) -> dict:
        return {
            "grid": {
                "x_min": self.grid.x_min,
                "x_max": self.grid.x_max,
                "points": self.grid.points,
                "refinement_levels": self.grid.refinement_levels,
            },
            "levels": [
                {
                    "nu": lv.index,
                    "numeric": lv.numeric,
                    "analytic": lv.analytic,
                    "abs_error": lv.abs_error,
                    "converged": lv.converged,
                }
                for lv in self.levels
            ],
        }


def _richardson(estimates: Sequence[np.ndarray]) -> list:
    """Successive Richardson columns for an h^2, h^4, ... error expansion."""
    table = [np.asarray(estimates[0])]
    rows = [list(map(np.asarray, estimates))]
    for order in range(1, len(estimates)):
        prev = rows[-1]
        fac = 4.0**order
        rows.append([(fac * prev[i + 1] - prev[i]) / (fac - 1) for i in range(len(prev) - 1)])
    return [row[-1] for row in rows]


def bound_states(potential: PotentialLike, grid: Optional[GridSpec] = None, k: int = 5,
                 analytic: Optional[Callable[[int], float]] = None, omega: float = 1.0,
                 tol: float = DEFAULTS.spectrum_tol,
                 config: NumericsConfig = DEFAULTS) -> SpectrumReport:
    """Lowest ``k`` levels of -d^2/dx^2 + V on (x_min, x_max), Dirichlet ends.

    Solves the three-point discretization on ``grid.refinement_levels``
    nested grids (h, h/2, ...) and Richardson-extrapolates.  A level is
    flagged converged when the last two extrapolation columns differ by
    less than ``10 * tol``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if grid is None:
        e_guess = analytic(k - 1) if analytic is not None else 4.0 * k * float(omega)
        grid = default_grid(potential, omega, e_guess, config)
    raw = []
    for level in range(grid.refinement_levels):
        x = grid.nodes(level)
        d, e = fd_hamiltonian(potential, x)
        raw.append(tridiag_eigvals(d, e, k, tol=1e-13))
    cols = _richardson(raw)
    best = cols[-1]
    if len(cols) > 1:
        change = np.abs(cols[-1] - cols[-2])
    else:
        change = np.full(k, np.inf)
    levels = []
    for j in range(len(best)):
        ref = analytic(j) if analytic is not None else None
        err = abs(float(best[j]) - ref) if ref is not None else None
        levels.append(Level(j, float(best[j]), ref, err, bool(change[j] < 10 * tol)))
    return SpectrumReport(levels, grid, [r.tolist() for r in raw])


def ground_state_overlap(potential: PotentialLike, psi: Callable, grid: GridSpec) -> float:
    """|<numeric ground eigenvector, sampled psi>| on the finest grid."""
    x = grid.nodes(grid.refinement_levels - 1)
    d, e = fd_hamiltonian(potential, x)
    e0 = tridiag_eigvals(d, e, 1, tol=1e-14)[0]
    v = tridiag_eigvec(d, e, e0)
    s = np.asarray(psi(x[1:-1]), dtype=float)
    s = s / np.linalg.norm(s)
    return float(abs(np.dot(v, s)))


# --- analytic wavefunctions ----------------------------------------------

class Wavefunction:
    """Normalized eta_l(z) y(z) / g(z) as a function of x > 0."""

    def __init__(self, spec: ExtensionSpec, nu: int, tol: float = DEFAULTS.quad_tol):
        self.spec = spec
        self.nu = nu
        p = spec.params
        self.omega = float(p.omega)
        self.alpha = float(p.alpha)
        self.eop: EOPoly = partner_wavefunction_poly(p, spec, nu)
        self._y = self.eop.poly
        self._g = spec.g
        sign = 1.0 if float(self._y(0)) / float(self._g(0)) > 0 else -1.0
        if self._y(0) == 0:
            sign = 1.0 if self._y.eval_float(1e-6) / self._g.eval_float(1e-6) > 0 else -1.0
        self._sign = sign
        self._norm = 1.0
        res = integrate_halfline(lambda x: self.raw(x) ** 2, tol=tol)
        self.norm_result = res
        self._norm = 1.0 / math.sqrt(res.value)

    def raw(self, x):
        x = np.asarray(x, dtype=float)
        z = 0.5 * self.omega * x**2
        with np.errstate(divide="ignore", under="ignore"):
            log_eta = 0.25 * (2 * self.alpha + 1) * np.log(z) - 0.5 * z
            eta = np.exp(log_eta)
        return self._sign * self._norm * eta * self._y.eval_float(z) / self._g.eval_float(z)

    def __call__(self, x):
        return self.raw(x)


def wavefunction(spec: ExtensionSpec, nu: int, x) -> np.ndarray:
    """Normalized bound state of V_{l,ext} (positive as x -> 0+)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("wavefunction requires x > 0")
    return Wavefunction(spec, nu)(x)
