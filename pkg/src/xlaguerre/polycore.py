"""Exact univariate polynomial and rational-function arithmetic over Q.

Coefficients are :class:`fractions.Fraction` values stored in ascending
order of degree.  The zero polynomial is the empty coefficient tuple.
All objects are immutable; every operation returns a new value.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "Poly",
    "RationalFn",
    "to_fraction",
    "wronskian2",
    "count_roots_positive",
    "sturm_sequence",
    "poly_gcd",
]

ScalarLike = Union[int, Fraction, str, Rational]


def to_fraction(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused: they would silently smuggle rounding into the
    exact layer.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a valid scalar")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _trim(coeffs: Iterable[Fraction]) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Polynomial in ``z`` with exact rational coefficients (ascending order)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        self._c = _trim(to_fraction(c) for c in coeffs)

    # construction helpers
    @classmethod
    def const(cls, c: ScalarLike) -> "Poly":
        return cls([c])

    @classmethod
    def z(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    # basic properties
    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"({abs(c)})*{mono}" if c.denominator != 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[-1]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in reversed(terms[:-1]):
            text += f" {sign} {body}"
        return text

    # arithmetic
    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(to_fraction(other))

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        n = max(len(self._c), len(other._c))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._c)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, RationalFn):
            return NotImplemented
        other = self._lift(other)
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: ScalarLike) -> "Poly":
        c = to_fraction(c)
        return Poly(c * a for a in self._c)

    def deriv(self, order: int = 1) -> "Poly":
        p = self
        for _ in range(order):
            p = Poly(k * c for k, c in enumerate(p._c) if k > 0)
        return p

    def divmod(self, other: "Poly") -> tuple:
        """Exact Euclidean division: returns (quotient, remainder)."""
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dd = other.degree
        lead = other.leading
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            quot[k - dd] = c
            if c:
                for j, b in enumerate(other._c):
                    rem[k - dd + j] -= c * b
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other) -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"division leaves remainder {r}")
        return q

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return RationalFn(self, other)
        c = to_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self.scale(1 / c)

    def __rtruediv__(self, other):
        return RationalFn(self._lift(other), self)

    # evaluation
    def __call__(self, x: ScalarLike) -> Fraction:
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def eval_float(self, x):
        """Horner evaluation in float64; ``x`` may be a scalar or array."""
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for c in reversed(self._c):
            acc = acc * x + float(c)
        return acc if acc.ndim else float(acc)

    def compose_affine(self, s: ScalarLike, t: ScalarLike = 0) -> "Poly":
        """Return p(s*z + t)."""
        inner = Poly([t, s])
        acc = Poly()
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    # normal forms
    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive integral (1 for zero)."""
        if not self._c:
            return Fraction(1)
        from math import gcd
        from functools import reduce

        nums = reduce(gcd, (abs(c.numerator) for c in self._c if c))
        dens = 1
        for c in self._c:
            dens = dens * c.denominator // gcd(dens, c.denominator)
        return Fraction(nums, dens)

    def primitive(self) -> "Poly":
        return self.scale(1 / self.content())

    def to_strings(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self._c]

    def float_coeffs(self) -> np.ndarray:
        return np.array([float(c) for c in self._c], dtype=float)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def wronskian2(f: Poly, g: Poly) -> Poly:
    """Polynomial Wronskian f*g' - f'*g."""
    return f * g.deriv() - f.deriv() * g


def sturm_sequence(p: Poly) -> list:
    """Sturm chain of p with positive content removed at every step."""
    seq = [p.primitive(), p.deriv().primitive()]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-(r.primitive()))
    return seq


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_positive(p: Poly) -> int:
    """Number of distinct real roots of p in the open interval (0, inf)."""
    if p.is_zero():
        raise ValueError("undefined root count for the zero polynomial")
    # strip roots at z = 0: they are not in the open interval
    c = list(p.coeffs)
    while c and c[0] == 0:
        c.pop(0)
    q = Poly(c)
    if q.degree < 1:
        return 0
    q = q.exact_div(poly_gcd(q, q.deriv()))
    if q.degree < 1:
        return 0
    seq = sturm_sequence(q)
    at_zero = _sign_changes([s[0] for s in seq])
    at_inf = _sign_changes([s.leading for s in seq])
    return at_zero - at_inf


class RationalFn:
    """Reduced quotient num/den of exact polynomials with a monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None):
        num = Poly._lift(num)
        den = Poly.one() if den is None else Poly._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self._num, self._den = Poly(), Poly.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.leading
        self._num, self._den = num.scale(1 / lead), den.scale(1 / lead)

    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    def is_identically_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._den.degree == 0 and self._num.degree <= 0

    def reduce(self) -> "RationalFn":
        return RationalFn(self._num, self._den)

    @staticmethod
    def _lift(other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        return RationalFn(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalFn, Poly, int, Fraction)):
            o = self._lift(other)
            return self._num == o._num and self._den == o._den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"RationalFn(({self._num}) / ({self._den}))"

    def __add__(self, other) -> "RationalFn":
        o = self._lift(other)
        if self._den == o._den:
            return RationalFn(self._num + o._num, self._den)
        return RationalFn(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self._num, self._den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalFn":
        return self._lift(other) - self

    def __mul__(self, other) -> "RationalFn":
        o = self._lift(other)
        return RationalFn(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        o = self._lift(other)
        if o.is_identically_zero():
            raise ZeroDivisionError("division by an identically-zero rational function")
        return RationalFn(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other) -> "RationalFn":
        return self._lift(other) / self

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            return RationalFn(1) / (self ** (-k))
        return RationalFn(self._num ** k, self._den ** k)

    def deriv(self) -> "RationalFn":
        n, d = self._num, self._den
        return RationalFn(n.deriv() * d - n * d.deriv(), d * d)

    def __call__(self, x: ScalarLike) -> Fraction:
        x = to_fraction(x)
        d = self._den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at z = {x}")
        return self._num(x) / d

    def eval_float(self, x):
        return self._num.eval_float(x) / self._den.eval_float(x)
