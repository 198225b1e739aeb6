"""Tests for fractional operator types, analytic rules and the L1 scheme."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.errors import DomainError, IndexRangeError
from src.fracops import (
    Grid,
    Order,
    SampledFunction,
    caputo_left_l1,
    caputo_left_l1_all,
    caputo_left_power,
    caputo_of_constant,
    caputo_right_l1,
    caputo_right_l1_all,
    caputo_right_power,
    caputo_rl_correction,
    l1_weights,
    rl_integral_num,
    rl_left_of_constant,
    rl_left_power,
    rl_right_of_constant,
    rl_right_power,
)
from src.specfun import gamma

INV_GAMMA_1_5 = 1.12837917
GAMMA_3_OVER_GAMMA_2_5 = 1.50450556


def sample(m, fn, a=0.0, b=1.0):
    return SampledFunction.from_callable(Grid(a=a, b=b, m=m), fn)


class TestTypes:
    @pytest.mark.parametrize("alpha", [0.0, -0.2, 1.5])
    def test_order_range(self, alpha):
        with pytest.raises(ValidationError):
            Order(alpha=alpha)

    def test_classical_order(self):
        assert Order(alpha=1.0).is_classical
        assert not Order(alpha=0.999).is_classical

    def test_grid_requires_increasing_interval(self):
        with pytest.raises(ValidationError):
            Grid(a=1.0, b=1.0, m=4)
        with pytest.raises(ValidationError):
            Grid(a=0.0, b=1.0, m=0)

    def test_grid_nodes(self):
        grid = Grid(a=0.0, b=0.3, m=3)
        assert grid.node(3) == 0.3
        assert len(grid.nodes()) == 4
        assert grid.h == pytest.approx(0.1)

    def test_samples_length_and_finiteness(self):
        grid = Grid.unit(4)
        with pytest.raises(ValidationError):
            SampledFunction(grid=grid, values=[0.0, 1.0])
        with pytest.raises(ValidationError):
            SampledFunction(grid=grid, values=[0.0, 1.0, math.nan, 1.0, 0.0])

    def test_samples_are_immutable(self):
        raw = np.zeros(5)
        f = SampledFunction(grid=Grid.unit(4), values=raw)
        raw[0] = 7.0
        assert f.values[0] == 0.0
        with pytest.raises(ValueError):
            f.values[1] = 1.0

    def test_constant_callable_is_broadcast(self):
        f = sample(6, lambda x: 5.0)
        assert f.values.shape == (7,)
        assert np.all(f.values == 5.0)

    def test_reflection(self):
        f = sample(4, lambda x: x)
        np.testing.assert_allclose(f.reflected().values, [1.0, 0.75, 0.5, 0.25, 0.0])


class TestPowerRules:
    def test_caputo_left_power(self):
        assert caputo_left_power(1.0, Order(alpha=0.5), 0.0, 1.0) == pytest.approx(INV_GAMMA_1_5, abs=1e-8)
        assert caputo_left_power(1.0, Order(alpha=1.0), 0.0, 0.7) == pytest.approx(1.0, abs=1e-15)

    def test_exponent_zero_gives_constant(self):
        ord = Order(alpha=0.6)
        for x in (0.0, 0.3, 0.9):
            assert caputo_left_power(0.6, ord, 0.0, x) == pytest.approx(gamma(1.6), rel=1e-14)

    def test_vanishes_at_left_endpoint(self):
        assert caputo_left_power(2.0, Order(alpha=0.5), 0.0, 0.0) == 0.0

    def test_caputo_power_domain(self):
        with pytest.raises(DomainError):
            caputo_left_power(0.0, Order(alpha=0.5), 0.0, 1.0)
        with pytest.raises(DomainError):
            caputo_left_power(1.0, Order(alpha=0.5), 0.5, 0.2)
        with pytest.raises(DomainError):
            caputo_right_power(1.0, Order(alpha=0.5), 1.0, 1.2)

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 0.95])
    def test_kernel_annihilation(self, alpha):
        ord = Order(alpha=alpha)
        for x in (0.0, 0.25, 0.5, 0.99):
            assert rl_right_power(alpha - 1.0, ord, 1.0, x) == 0.0
            assert rl_left_power(alpha - 1.0, ord, 0.0, 1.0 - x) == 0.0

    def test_rl_right_exponent_zero(self):
        assert rl_right_power(0.6, Order(alpha=0.6), 1.0, 0.0) == pytest.approx(gamma(1.6), rel=1e-14)

    def test_rl_right_classical_linear(self):
        # Gamma(2)/Gamma(1) (1 - x)^0
        assert rl_right_power(1.0, Order(alpha=1.0), 1.0, 0.25) == pytest.approx(1.0, abs=1e-15)

    def test_rl_power_domain(self):
        with pytest.raises(DomainError):
            rl_right_power(-1.0, Order(alpha=0.5), 1.0, 0.5)
        with pytest.raises(DomainError):
            rl_left_power(-1.5, Order(alpha=0.5), 0.0, 0.5)
        with pytest.raises(DomainError):
            rl_right_power(1.0, Order(alpha=0.5), 1.0, 1.5)

    def test_singular_endpoint(self):
        with pytest.raises(DomainError):
            rl_right_power(0.2, Order(alpha=0.5), 1.0, 1.0)

    def test_right_mirrors_left(self):
        ord = Order(alpha=0.35)
        assert caputo_right_power(1.7, ord, 1.0, 0.2) == pytest.approx(
            caputo_left_power(1.7, ord, 0.0, 0.8), rel=1e-14
        )


class TestConstants:
    @pytest.mark.parametrize("K,alpha", [(7.0, 0.5), (0.0, 0.5), (-3.2, 0.4)])
    def test_caputo_kills_constants(self, K, alpha):
        assert caputo_of_constant(K, Order(alpha=alpha)) == 0.0

    def test_rl_left_of_constant(self):
        ord = Order(alpha=0.5)
        assert rl_left_of_constant(1.0, ord, 0.0, 1.0) == pytest.approx(0.56418958, abs=1e-8)
        assert rl_left_of_constant(0.0, ord, 0.0, 1.0) == 0.0
        assert rl_left_of_constant(2.0, ord, 0.0, 0.25) == pytest.approx(2.25675833, abs=1e-8)

    def test_rl_right_of_constant(self):
        ord = Order(alpha=0.5)
        assert rl_right_of_constant(2.0, ord, 1.0, 0.75) == pytest.approx(2.25675833, abs=1e-8)

    def test_rl_constant_errors(self):
        with pytest.raises(DomainError):
            rl_left_of_constant(1.0, Order(alpha=0.5), 0.0, 0.0)
        with pytest.raises(DomainError):
            rl_left_of_constant(1.0, Order(alpha=1.0), 0.0, 0.5)
        with pytest.raises(DomainError):
            rl_right_of_constant(1.0, Order(alpha=0.5), 1.0, 1.0)

    @pytest.mark.parametrize("x", [0.25, 0.5, 0.75])
    def test_caputo_rl_relation(self, x):
        ord = Order(alpha=0.6)
        c = 0.3
        caputo = caputo_left_power(1.0, ord, 0.0, x) + caputo_of_constant(c, ord)
        rl = rl_left_power(1.0, ord, 0.0, x) + rl_left_of_constant(c, ord, 0.0, x)
        gap = c / gamma(1.0 - ord.alpha) * x ** (-ord.alpha)
        assert caputo == pytest.approx(rl - gap, abs=1e-10)
        assert caputo_rl_correction(c, ord, x) == pytest.approx(gap, abs=1e-12)

    def test_correction_vanishes_at_classical_order(self):
        assert caputo_rl_correction(5.0, Order(alpha=1.0), 0.5) == 0.0


class TestRiemannLiouvilleIntegral:
    def test_unit_integral(self):
        ones = sample(8, lambda x: 1.0, b=2.0)
        assert rl_integral_num(ones, Order(alpha=1.0), 8) == pytest.approx(2.0, rel=1e-14)

    def test_zero(self):
        assert rl_integral_num(sample(10, lambda x: 0.0), Order(alpha=0.5), 10) == 0.0

    def test_linear_against_power_rule(self):
        f = sample(2000, lambda x: x)
        expected = 4.0 / (3.0 * math.sqrt(math.pi))
        assert rl_integral_num(f, Order(alpha=0.5), 2000) == pytest.approx(expected, abs=2e-3)

    def test_index_range(self):
        f = sample(5, lambda x: x)
        with pytest.raises(IndexRangeError):
            rl_integral_num(f, Order(alpha=0.5), 0)
        with pytest.raises(IndexRangeError):
            rl_integral_num(f, Order(alpha=0.5), 6)


class TestL1Scheme:
    def test_weights_at_classical_order(self):
        np.testing.assert_allclose(l1_weights(Order(alpha=1.0), 0.1, 4), [10.0, 0.0, 0.0, 0.0])

    def test_constant(self):
        f = sample(20, lambda x: 5.0)
        for i in (1, 7, 20):
            assert caputo_left_l1(f, Order(alpha=0.3), i) == 0.0
        for i in (0, 7, 19):
            assert caputo_right_l1(f, Order(alpha=0.3), i) == 0.0

    def test_linear_exactness(self):
        f = sample(100, lambda x: x)
        assert caputo_left_l1(f, Order(alpha=0.5), 100) == pytest.approx(INV_GAMMA_1_5, abs=1e-8)
        assert caputo_left_l1(f, Order(alpha=0.5), 100) == pytest.approx(
            caputo_left_power(1.0, Order(alpha=0.5), 0.0, 1.0), abs=1e-12
        )

    def test_affine_exactness_at_every_node(self):
        ord = Order(alpha=0.3)
        f = sample(50, lambda x: 2.0 * x + 3.0)
        for i in range(1, 51):
            expected = 2.0 * caputo_left_power(1.0, ord, 0.0, f.grid.node(i)) + caputo_of_constant(3.0, ord)
            assert caputo_left_l1(f, ord, i) == pytest.approx(expected, abs=1e-12)

    def test_quadratic(self):
        f = sample(1000, lambda x: x * x)
        assert caputo_left_l1(f, Order(alpha=0.5), 1000) == pytest.approx(GAMMA_3_OVER_GAMMA_2_5, abs=5e-3)

    def test_right_linear_exactness(self):
        f = sample(100, lambda x: 1.0 - x)
        assert caputo_right_l1(f, Order(alpha=0.5), 0) == pytest.approx(
            caputo_right_power(1.0, Order(alpha=0.5), 1.0, 0.0), abs=1e-12
        )

    def test_right_quadratic(self):
        f = sample(1000, lambda x: (1.0 - x) ** 2)
        assert caputo_right_l1(f, Order(alpha=0.5), 0) == pytest.approx(GAMMA_3_OVER_GAMMA_2_5, abs=5e-3)

    def test_classical_order_is_backward_difference(self):
        f = sample(10, lambda x: x ** 3)
        for i in range(1, 11):
            expected = (f.values[i] - f.values[i - 1]) / f.grid.h
            assert caputo_left_l1(f, Order(alpha=1.0), i) == pytest.approx(expected, rel=1e-12)

    def test_single_step_grid(self):
        f = SampledFunction(grid=Grid.unit(1), values=[0.0, 2.0])
        assert caputo_left_l1(f, Order(alpha=0.5), 1) == pytest.approx(2.0 / gamma(1.5), rel=1e-14)

    def test_reflection_duality(self):
        ord = Order(alpha=0.45)
        f = sample(40, lambda x: np.sin(3.0 * x) + x ** 2)
        mirrored = SampledFunction(grid=f.grid, values=f.values[::-1])
        for i in range(0, 40):
            assert caputo_right_l1(f, ord, i) == caputo_left_l1(mirrored, ord, 40 - i)

    def test_all_nodes_agree_with_single_node(self):
        ord = Order(alpha=0.65)
        f = sample(60, lambda x: np.exp(x) * x)
        left = caputo_left_l1_all(f, ord)
        right = caputo_right_l1_all(f, ord)
        assert left[0] == 0.0
        assert right[60] == 0.0
        for i in range(1, 61):
            assert left[i] == pytest.approx(caputo_left_l1(f, ord, i), rel=1e-10, abs=1e-12)
        for i in range(0, 60):
            assert right[i] == pytest.approx(caputo_right_l1(f, ord, i), rel=1e-10, abs=1e-12)

    def test_index_range(self):
        f = sample(5, lambda x: x)
        with pytest.raises(IndexRangeError):
            caputo_left_l1(f, Order(alpha=0.5), 0)
        with pytest.raises(IndexRangeError):
            caputo_left_l1(f, Order(alpha=0.5), 6)
        with pytest.raises(IndexRangeError):
            caputo_right_l1(f, Order(alpha=0.5), 5)

    @pytest.mark.parametrize("alpha", [0.4, 0.7])
    def test_convergence_order(self, alpha):
        ord = Order(alpha=alpha)

        def max_error(m):
            f = sample(m, lambda x: x * x)
            exact = gamma(3.0) / gamma(3.0 - alpha) * f.grid.nodes() ** (2.0 - alpha)
            return np.max(np.abs(caputo_left_l1_all(f, ord) - exact))

        coarse, fine = max_error(1000), max_error(2000)
        assert fine / coarse <= 2.0 ** (-(2.0 - alpha)) * 1.15
        rate = math.log2(coarse / fine)
        assert 2.0 - alpha - 0.15 <= rate <= 2.0 - alpha + 0.15


def test_integration_by_parts():
    """int g Caputo_left(f) = int f RL_right(g) for f = x(1-x), g = (1-x)^2."""
    ord = Order(alpha=0.6)
    m = 4000
    xs = (np.arange(m) + 0.5) / m

    caputo_f = np.array([
        caputo_left_power(1.0, ord, 0.0, x) - caputo_left_power(2.0, ord, 0.0, x) for x in xs
    ])
    rl_g = np.array([rl_right_power(2.0, ord, 1.0, x) for x in xs])

    lhs = np.sum((1.0 - xs) ** 2 * caputo_f) / m
    rhs = np.sum(xs * (1.0 - xs) * rl_g) / m
    assert lhs == pytest.approx(rhs, rel=1e-3)
