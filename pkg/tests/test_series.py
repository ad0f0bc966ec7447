"""Truncated power series arithmetic."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohrmap import (
    PowerSeries,
    cauchy_product,
    circle_grid,
    compose,
    eval_harmonic,
    evaluate,
    HarmonicMap,
    term_differentiate,
    term_integrate,
)

coeff_lists = st.lists(
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False),
    min_size=1,
    max_size=40,
)


class TestPowerSeries:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            PowerSeries([])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            PowerSeries([1.0, np.nan])
        with pytest.raises(ValueError):
            PowerSeries([np.inf])

    def test_immutable(self):
        f = PowerSeries([1.0, 2.0])
        with pytest.raises((AttributeError, ValueError)):
            f.coeffs = np.array([0.0])
        with pytest.raises(ValueError):
            f.coeffs[0] = 5.0

    def test_order_and_len(self):
        f = PowerSeries([1.0, 2.0, 3.0])
        assert f.order == 2
        assert len(f) == 3

    def test_truncated_trims_and_pads(self):
        f = PowerSeries([1.0, 2.0, 3.0])
        assert np.array_equal(f.truncated(1).coeffs, [1.0, 2.0])
        padded = f.truncated(4)
        assert padded.order == 4
        assert np.array_equal(padded.coeffs, [1.0, 2.0, 3.0, 0.0, 0.0])

    def test_equality_and_hash(self):
        a = PowerSeries([1.0, 2.0])
        b = PowerSeries([1.0, 2.0])
        assert a == b
        assert hash(a) == hash(b)
        assert a != PowerSeries([1.0, 2.0, 0.0])


class TestEvaluate:
    def test_geometric_series_partial(self):
        f = PowerSeries(np.ones(11))
        # (1 - z^{11}) / (1 - z) at z = 1/2
        expected = (1.0 - 0.5**11) / 0.5
        assert evaluate(f, 0.5) == pytest.approx(expected, rel=1e-15)

    def test_scalar_returns_complex(self):
        f = PowerSeries([0.0, 1.0])
        v = evaluate(f, 0.25)
        assert isinstance(v, complex)
        assert v == 0.25

    def test_vectorized(self):
        f = PowerSeries([1.0, 1.0, 1.0])
        z = np.array([0.0, 0.5j])
        out = evaluate(f, z)
        assert out.shape == (2,)
        assert out[0] == 1.0
        assert out[1] == pytest.approx(1.0 + 0.5j - 0.25)

    def test_rejects_non_finite_point(self):
        f = PowerSeries([1.0])
        with pytest.raises(ValueError):
            evaluate(f, np.nan)


class TestCalculus:
    @given(coeff_lists)
    @settings(max_examples=100, deadline=None)
    def test_round_trip_within_two_ulp(self, coeffs):
        # (c/n)*n is not exact in doubles, e.g. c = 1, n = 49
        f = PowerSeries(coeffs)
        back = term_differentiate(term_integrate(f)).coeffs[: len(coeffs)]
        orig = f.coeffs
        tol = 2.0 * np.spacing(np.abs(orig) + 1e-300)
        assert np.all(np.abs(back - orig) <= np.maximum(tol, 2e-308))

    def test_round_trip_not_exact_sometimes(self):
        f = PowerSeries(np.ones(60))
        back = term_differentiate(term_integrate(f)).coeffs[:60]
        assert not np.array_equal(back, f.coeffs)  # hits c/49*49 != 1

    def test_integrate_shifts(self):
        f = PowerSeries([2.0, 4.0])
        F = term_integrate(f)
        assert np.array_equal(F.coeffs, [0.0, 2.0, 2.0])

    def test_differentiate_drops(self):
        f = PowerSeries([7.0, 2.0, 3.0])
        assert np.array_equal(term_differentiate(f).coeffs, [2.0, 6.0])

    def test_differentiate_constant(self):
        assert np.array_equal(term_differentiate(PowerSeries([5.0])).coeffs, [0.0])


class TestCauchyProduct:
    def test_known_square(self):
        # (1 + z)^2 = 1 + 2z + z^2, padded so the square fits
        f = PowerSeries([1.0, 1.0]).truncated(2)
        assert np.array_equal(cauchy_product(f, f).coeffs, [1.0, 2.0, 1.0])

    def test_truncates_to_common_order(self):
        f = PowerSeries([1.0, 1.0, 1.0])
        g = PowerSeries([1.0, 1.0])
        assert cauchy_product(f, g).order == 1
        assert cauchy_product(f, g.truncated(2)).order == 2

    @given(
        st.lists(st.floats(-5, 5, allow_nan=False), min_size=2, max_size=8),
        st.lists(st.floats(-5, 5, allow_nan=False), min_size=2, max_size=8),
    )
    @settings(max_examples=60, deadline=None)
    def test_product_evaluates_consistently(self, ca, cb):
        # pad both to the sum of degrees so nothing is truncated away
        n = len(ca) + len(cb)
        f, g = PowerSeries(ca).truncated(n), PowerSeries(cb).truncated(n)
        prod = cauchy_product(f, g)
        z = 0.5
        direct = evaluate(f, z) * evaluate(g, z)
        scale = max(1.0, abs(direct))
        assert abs(evaluate(prod, z) - direct) <= 1e-10 * scale


class TestCompose:
    def test_requires_zero_constant_term(self):
        f = PowerSeries([0.0, 1.0])
        with pytest.raises(ValueError):
            compose(f, PowerSeries([0.5, 1.0]))

    def test_koebe_of_z_squared_doubles_indices(self):
        m = np.arange(0.0, 41.0)
        koebe = PowerSeries(m)  # z/(1-z)^2 truncated
        psi = PowerSeries([0.0, 0.0, 1.0]).truncated(40)
        comp = compose(koebe, psi, order=40)
        # sum m z^m -> sum m z^{2m}: slot 2m holds m, odd slots vanish
        assert np.allclose(comp.coeffs[::2], np.arange(0.0, 21.0))
        assert np.allclose(comp.coeffs[1::2], 0.0)

    def test_compose_matches_pointwise(self):
        m = np.arange(0.0, 121.0)
        f = PowerSeries(m)
        psi = PowerSeries([0.0, 0.3, 0.1])
        comp = compose(f, psi, order=120)
        z = 0.3
        inner = evaluate(psi, z)
        # |inner| < 0.12 so the order-120 truncation error is ~1e-100
        assert evaluate(comp, z) == pytest.approx(evaluate(f, inner), abs=1e-12)

    def test_default_order_is_min(self):
        f = PowerSeries(np.ones(10))
        psi = PowerSeries([0.0, 1.0]).truncated(5)
        assert compose(f, psi).order == 5


class TestHarmonicMap:
    def test_requires_matching_orders(self):
        with pytest.raises(ValueError):
            HarmonicMap(PowerSeries([0.0, 1.0]), PowerSeries([0.0]))

    def test_requires_g0_zero(self):
        with pytest.raises(ValueError):
            HarmonicMap(PowerSeries([0.0, 1.0]), PowerSeries([0.5, 0.0]))

    def test_normalization_flag(self):
        f = HarmonicMap(PowerSeries([0.0, 1.0]), PowerSeries([0.0, 0.5]))
        assert f.is_normalized
        g = HarmonicMap(PowerSeries([0.0, 2.0]), PowerSeries([0.0, 0.5]))
        assert not g.is_normalized

    def test_coefficient_moduli(self):
        f = HarmonicMap(PowerSeries([0.0, 1.0, -2.0]), PowerSeries([0.0, 3.0j, 0.0]))
        assert np.array_equal(f.coefficient_moduli(), [0.0, 4.0, 2.0])

    def test_eval_is_h_plus_conj_g(self):
        f = HarmonicMap(PowerSeries([0.0, 1.0]), PowerSeries([0.0, 0.5]))
        z = 0.2 + 0.1j
        assert eval_harmonic(f, z) == pytest.approx(z + np.conj(0.5 * z))


class TestCircleGrid:
    def test_shape_and_radius(self):
        pts = circle_grid(0.5, 32)
        assert pts.shape == (32,)
        assert np.allclose(np.abs(pts), 0.5)

    def test_first_point_real(self):
        assert circle_grid(0.25, 8)[0] == 0.25

    def test_rejects_radius_one(self):
        with pytest.raises(ValueError):
            circle_grid(1.0, 8)
