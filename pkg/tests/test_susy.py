from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xlaguerre.eop import Conventional, FirstOrder, SecondOrder, SeedKind, SSUSYCase, g_poly
from xlaguerre.polycore import Poly, RationalFn
from xlaguerre.susy import (
    OscParams,
    XFunction,
    extension_from_source,
    factorization_residual,
    first_order_extension,
    first_order_partner_residuals,
    oscillator_energy,
    partner_wavefunction_poly,
    second_order_extension,
    seed_function,
    si_residual,
    ssusy_pair,
    superpotential_conventional,
    superpotential_ext,
    v_conventional,
    v_extended,
    v_rational_part,
)

z = Poly.z()
I, II = SeedKind.TYPE_I, SeedKind.TYPE_II


class TestConventional:
    def test_value_at_unit_z(self):
        assert v_conventional(OscParams(1, 1)).at_z(1) == F(3, 2)

    def test_closed_form(self):
        v = v_conventional(OscParams(2, 2))
        assert v.rfn == RationalFn(z * z + 6, z)

    def test_x_form(self):
        p = OscParams(F(3, 2), 2)
        x = np.linspace(0.3, 4, 17)
        w = 1.5
        expected = 0.25 * w**2 * x**2 + 6 / x**2
        assert np.allclose(v_conventional(p)(x), expected, rtol=1e-14)

    def test_energies(self):
        p = OscParams(1, 0)
        assert [oscillator_energy(p, n) for n in range(3)] == [F(3, 2), F(7, 2), F(11, 2)]
        assert p.ground_energy == F(3, 2)

    def test_params_validated(self):
        with pytest.raises(ValueError):
            OscParams(0, 1)
        with pytest.raises(ValueError):
            OscParams(1, -1)
        with pytest.raises(TypeError):
            OscParams(1.0, 1)


class TestRationalPart:
    @pytest.mark.parametrize("l,omega", [(0, F(1)), (1, F(2)), (2, F(1, 3))])
    def test_linear_g_matches_x_form(self, l, omega):
        p = OscParams(omega, l)
        v = v_rational_part(z + p.alpha, omega)
        x = np.linspace(0.05, 5, 41)
        w = float(omega)
        s = w * x**2 + 2 * l + 1
        expected = 4 * w / s - 8 * w * (2 * l + 1) / s**2
        assert np.allclose(v(x), expected, rtol=1e-13, atol=1e-14)

    def test_origin_value_l0(self):
        for omega in (F(1), F(5, 2)):
            p = OscParams(omega, 0)
            assert v_extended(p, z + p.alpha).at_z(0) == -4 * omega

    def test_constant_g_gives_nothing(self):
        assert v_rational_part(Poly.const(7), 1).rfn.is_identically_zero()

    def test_singular_rejected(self):
        with pytest.raises(ValueError, match="singular extension"):
            v_rational_part(z - 1, 1)
        v_rational_part(z - 1, 1, check=False)


class TestSeeds:
    def test_type_i_energy(self):
        s = seed_function(I, OscParams(1, 0), 1)
        assert s.energy == F(-7, 2)
        assert s.energy < OscParams(1, 0).ground_energy

    def test_type_ii_energy(self):
        s = seed_function(II, OscParams(1, 2), 1)
        assert s.energy == F(1, 2)

    def test_type_ii_outside_range(self):
        with pytest.raises(ValueError, match="normalizable inverse risk"):
            seed_function(II, OscParams(1, 1), 2)

    def test_seed_solves_equation(self):
        # -phi'' + V phi = E phi on sample points for a type I seed
        p = OscParams(1, 1)
        s = seed_function(I, p, 2)
        lg = s.log_deriv_x()
        riccati = (lg.deriv() + lg * lg).even_part()
        assert (v_conventional(p).rfn - s.energy - riccati).is_identically_zero()


class TestExtensions:
    def test_first_order_shifts(self):
        p = OscParams(1, 1)
        assert first_order_extension(I, p, 1).shiftC == -1
        assert first_order_extension(II, p, 1).shiftC == 1

    def test_type_i_needs_l_one(self):
        with pytest.raises(ValueError):
            first_order_extension(I, OscParams(1, 0), 1)

    def test_type_ii_m_above_l_rejected(self):
        with pytest.raises(ValueError, match="outside validity range"):
            first_order_extension(II, OscParams(1, 0), 2)

    def test_pole_on_half_line_rejected(self):
        # type II g2 at l = 0 has a positive root
        with pytest.raises(ValueError, match="pole"):
            extension_from_source(OscParams(1, 0), FirstOrder(II, 2))

    def test_degree_mismatch_rejected(self):
        from xlaguerre.susy import ExtensionSpec

        with pytest.raises(ValueError):
            ExtensionSpec(OscParams(1, 1), z + 1, 2, FirstOrder(I, 2))

    def test_second_order_shift(self):
        assert second_order_extension(SSUSYCase.I_II, OscParams(1, 1), 1, 1).shiftC == 0
        assert second_order_extension(SSUSYCase.II_II, OscParams(2, 0), 1, 2).shiftC == 4
        assert second_order_extension(SSUSYCase.I_I, OscParams(1, 2), 1, 2).shiftC == -2

    @pytest.mark.parametrize("kind,l,m", [(I, 1, 1), (I, 2, 2), (II, 0, 1), (II, 1, 1), (II, 2, 2)])
    def test_first_order_partner_identities(self, kind, l, m):
        for res in first_order_partner_residuals(kind, OscParams(1, l), m).values():
            assert res.is_identically_zero()

    @pytest.mark.parametrize("src,ls", [(Conventional(), (0, 1, 2)), (FirstOrder(I, 1), (0, 1, 2)),
                                        (FirstOrder(I, 2), (0, 1, 2)), (FirstOrder(II, 2), (1, 2)),
                                        (SecondOrder(SSUSYCase.I_II, 1, 1), (1, 2))])
    def test_factorization(self, src, ls):
        for l in ls:
            spec = extension_from_source(OscParams(F(3, 4), l), src)
            assert factorization_residual(spec).is_identically_zero()


class TestSuperpotential:
    def test_conventional_form(self):
        p = OscParams(1, 0)
        assert superpotential_conventional(p) == RationalFn(Poly([-F(1, 2), F(1, 2)]), z)

    def test_constant_g_reduces(self):
        p = OscParams(1, 2)
        assert superpotential_ext(p, Poly.one()) == superpotential_conventional(p)

    def test_g_plus_required(self):
        with pytest.raises(ValueError):
            superpotential_ext(OscParams(1, 1), z + F(3, 2))

    def test_linear_g(self):
        p = OscParams(1, 0)
        a = p.alpha
        u = superpotential_ext(p, z + a, z + a + 1)
        assert u == superpotential_conventional(p) - RationalFn(1, z + a + 1) + RationalFn(1, z + a)


class TestShapeInvariance:
    @pytest.mark.parametrize("src", [Conventional(), FirstOrder(I, 1), FirstOrder(I, 2),
                                     FirstOrder(II, 2), SecondOrder(SSUSYCase.I_II, 1, 1)])
    @pytest.mark.parametrize("omega", [F(1), F(1, 3)])
    def test_identically_zero(self, src, omega):
        for l in (0, 1, 2):
            assert si_residual(OscParams(omega, l), src, require_regular=False).is_identically_zero()

    def test_regularity_gate(self):
        with pytest.raises(ValueError):
            si_residual(OscParams(1, 0), FirstOrder(II, 2))

    def test_detects_wrong_partner(self, monkeypatch):
        import xlaguerre.susy as susy_mod

        monkeypatch.setattr(susy_mod, "ground_state_poly", lambda src, a: g_poly(src, a)[0])
        assert not susy_mod.si_residual(OscParams(1, 1), FirstOrder(I, 1)).is_identically_zero()

    @settings(max_examples=25, deadline=None)
    @given(st.fractions(min_value=F(1, 10), max_value=10, max_denominator=12), st.integers(0, 4))
    def test_any_frequency(self, omega, l):
        assert si_residual(OscParams(omega, l), FirstOrder(I, 1)).is_identically_zero()


class TestSSUSY:
    def test_case_iii_constants(self):
        pair = ssusy_pair(SSUSYCase.I_II, OscParams(1, 1), 1, 1)
        assert pair.c == -6
        assert pair.mu == 3
        assert pair.energy_shift == F(3, 2)

    @pytest.mark.parametrize("case,l,m1,m2", [(SSUSYCase.I_I, 2, 1, 2), (SSUSYCase.II_II, 0, 1, 2),
                                              (SSUSYCase.I_II, 1, 1, 1), (SSUSYCase.I_II, 2, 1, 2)])
    def test_all_residuals_vanish(self, case, l, m1, m2):
        for swap in (False, True):
            pair = ssusy_pair(case, OscParams(1, l), m1, m2, swap=swap)
            for name, res in pair.residuals.items():
                assert res.is_identically_zero(), name

    def test_order_independent_endpoint(self):
        p = OscParams(1, 1)
        a = ssusy_pair(SSUSYCase.I_II, p, 1, 1)
        b = ssusy_pair(SSUSYCase.I_II, p, 1, 1, swap=True)
        assert a.V2.rfn == b.V2.rfn
        assert a.c == -b.c
        assert a.energy_shift == b.energy_shift
        assert not (a.intermediate.rfn - b.intermediate.rfn).is_identically_zero()

    def test_v2_matches_extension(self):
        p = OscParams(1, 1)
        pair = ssusy_pair(SSUSYCase.I_II, p, 1, 1)
        spec = second_order_extension(SSUSYCase.I_II, p, 1, 1)
        # V2 equals V_ext shifted by -(E1+E2)/2 + C
        assert (pair.V2.rfn - (spec.potential().rfn - (pair.E1 + pair.E2) / 2 + pair.shiftC)
                ).is_identically_zero()

    def test_case_iii_rejects_type_ii_seed_at_l0(self):
        with pytest.raises(ValueError, match="outside validity range"):
            ssusy_pair(SSUSYCase.I_II, OscParams(1, 0), 1, 1)

    def test_invalid_indices(self):
        with pytest.raises(ValueError):
            ssusy_pair(SSUSYCase.I_I, OscParams(1, 1), 1, 2)
        with pytest.raises(ValueError):
            ssusy_pair(SSUSYCase.I_II, OscParams(1, 0), 1, 2)


class TestXFunction:
    def test_derivative_of_odd(self):
        w = F(2)
        f = XFunction(1, RationalFn(z + 1), w)  # (w x)(w x^2/2 + 1)
        d = f.deriv()
        x = np.linspace(0.1, 2, 9)
        h = 1e-6
        assert np.allclose(d(x), (f(x + h) - f(x - h)) / (2 * h), rtol=1e-7)

    def test_product_parity(self):
        f = XFunction(1, RationalFn(z), 1)
        g = f * f
        assert g.parity == 0
        # (omega x)^2 = 2 omega z
        assert g.r == RationalFn(2 * z**3)

    def test_even_part_of_odd_fails(self):
        with pytest.raises(ValueError):
            XFunction(1, RationalFn(z), 1).even_part()


def test_partner_polynomial_from_spec():
    p = OscParams(1, 1)
    spec = first_order_extension(I, p, 1)
    y = partner_wavefunction_poly(p, spec, 2)
    assert y.n == 3
    with pytest.raises(ValueError):
        partner_wavefunction_poly(OscParams(1, 2), spec, 0)
