from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xlaguerre.polycore import (
    Poly,
    RationalFn,
    count_roots_positive,
    poly_gcd,
    to_fraction,
    wronskian2,
)

z = Poly.z()
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(rationals, min_size=0, max_size=6).map(Poly)


def test_zero_poly_is_empty():
    assert Poly([0, 0]).coeffs == ()
    assert Poly().degree == -1
    assert (z - z).is_zero()


def test_derivative_power_rule():
    a = F(1, 2)
    assert (z * z - a * (a + 2)).deriv() == 2 * z
    assert Poly.const(7).deriv().is_zero()


def test_square_expansion():
    a = F(3, 2)
    assert (z + a) * (z + a) == z**2 + 2 * a * z + a * a


def test_compose_with_reflection():
    # substitute-and-expand: -z + a + 1 at z -> -z
    a = F(5, 2)
    p = -z + a + 1
    assert p.compose_affine(-1) == z + a + 1
    # general affine map checked against pointwise substitution
    q = Poly([1, -2, F(1, 3), 4])
    r = q.compose_affine(F(2, 3), F(-1, 5))
    for x in (F(0), F(1), F(-7, 2), F(11, 3)):
        assert r(x) == q(F(2, 3) * x - F(1, 5))


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    assert to_fraction("3/2") == F(3, 2)


def test_divmod_roundtrip():
    a = Poly([1, 2, 3, 4, 5])
    b = Poly([F(1, 2), 0, 1])
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree
    with pytest.raises(ArithmeticError):
        a.exact_div(b)


def test_gcd_is_monic_common_factor():
    a = (z + 1) * (z - F(1, 3)) ** 2
    b = (z - F(1, 3)) * (z + 7)
    assert poly_gcd(a, b) == z - F(1, 3)


class TestWronskian:
    def test_self_is_zero(self):
        f = Poly([3, F(1, 2), -1])
        assert wronskian2(f, f).is_zero()

    def test_case_iii_unit_indices(self):
        a = F(7, 2)
        assert wronskian2(z + a + 1, -(z + a - 1)) == Poly.const(-2)

    def test_degree_count(self):
        f = Poly([1, 2])
        g = Poly([3, 0, 5])
        assert wronskian2(f, g).degree == 2

    @given(polys, polys)
    def test_antisymmetric(self, a, b):
        assert wronskian2(a, b) == -wronskian2(b, a)

    @given(polys, rationals)
    def test_scaled_copy(self, a, c):
        assert wronskian2(a, a.scale(c)).is_zero()


class TestRootCount:
    def test_negative_root(self):
        assert count_roots_positive(z + F(3, 2)) == 0

    def test_quadratic(self):
        a = F(3, 2)
        # roots +-sqrt(21)/2
        assert count_roots_positive(z * z - a * (a + 2)) == 1

    def test_cubic_g3(self):
        a = F(3, 2)
        g3 = Poly([(a - 1) * a * (a + 1), 3 * (a - 1) * (a + 1), 3 * a, 1]).scale(F(1, 3))
        assert count_roots_positive(g3) == 0
        grid = np.linspace(1e-6, 200, 200001)
        assert np.all(g3.eval_float(grid) > 0)

    def test_root_at_zero_not_counted(self):
        assert count_roots_positive(z * (z - 2)) == 1

    def test_multiplicity_ignored(self):
        assert count_roots_positive((z - 1) ** 3 * (z - 2) ** 2 * (z + 4)) == 2

    def test_zero_poly_raises(self):
        with pytest.raises(ValueError, match="undefined root count"):
            count_roots_positive(Poly())

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=6,
                    unique=True),
           st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda c: c != 0))
    def test_matches_dense_scan(self, roots, lead):
        p = Poly.const(lead)
        for r in roots:
            p = p * (z - r)
        expected = sum(1 for r in roots if r > 0)
        assert count_roots_positive(p) == expected
        # sign changes on a grid offset from every root (denominators <= 4)
        grid = np.arange(1, 6 * 4 * 97 + 40) / (4 * 97) + 1e-9
        vals = p.eval_float(grid)
        assert int(np.sum(np.signbit(vals[1:]) != np.signbit(vals[:-1]))) == expected


class TestRationalFn:
    def test_difference_is_zero(self):
        a = F(3, 2)
        r = RationalFn(1, z + a)
        assert (r - r).is_identically_zero()

    def test_quotient_rule(self):
        a = F(3, 2)
        assert RationalFn(1, z + a).deriv() == -RationalFn(1, (z + a) ** 2)

    def test_log_derivative(self):
        a = F(5, 2)
        g = z + a
        assert RationalFn(g.deriv(), g) == RationalFn(1, z + a)

    def test_canonical_form(self):
        r = RationalFn((z + 1) * 4, (z + 1) * (z * -2 + 6))
        assert r.den.leading == 1
        assert r.num == Poly.const(-2)
        assert poly_gcd(r.num, r.den).degree == 0

    def test_division_by_zero_fn(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn(z) / RationalFn(0)
        with pytest.raises(ZeroDivisionError):
            RationalFn(z, Poly())

    @given(polys, polys.filter(lambda p: not p.is_zero()))
    def test_reduce_idempotent(self, a, b):
        r = RationalFn(a, b)
        assert r.reduce() == r
        assert r.reduce().num.coeffs == r.num.coeffs

    @given(polys, polys.filter(lambda p: not p.is_zero()), polys.filter(lambda p: not p.is_zero()))
    def test_field_ops_consistent(self, a, b, c):
        r = RationalFn(a, b)
        s = RationalFn(c, b * b + 1)
        assert (r + s) - s == r
        assert (r * s) / s == r


@settings(max_examples=60)
@given(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=9), min_size=1, max_size=7),
       st.fractions(min_value=F(1, 10), max_value=3, max_denominator=16))
def test_exact_then_float_matches_float_eval(coeffs, x):
    # positive coefficients at positive x: no cancellation, well conditioned
    p = Poly([abs(c) + F(1, 100) for c in coeffs])
    exact = float(p(x))
    approx = p.eval_float(float(x))
    assert abs(exact - approx) <= 1e-12 * abs(exact)


def test_string_form():
    assert str(z * z - F(21, 4)) == "z^2 - 21/4"
    assert (z * 3 - 1).to_strings() == ["-1/1", "3/1"]
