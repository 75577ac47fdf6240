import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracfourier import (
    RealCoefficients,
    synthesize_classical,
    synthesize_expanded_form,
    synthesize_ffs,
    synthesize_linear_form,
    to_fractional,
)
from strategies import coefficient_sets

T = 2 * math.pi
R2 = math.sqrt(2)


def test_ffs_examples():
    assert synthesize_ffs(RealCoefficients(T, 1.0, [], []), 1, [0.3, 2.0]) == pytest.approx([0, 0], abs=0)
    assert synthesize_ffs(RealCoefficients(T, 0.0, [1.0], [0.0]), 0, [0.0]) == pytest.approx([1.0])
    got = synthesize_ffs(RealCoefficients(T, 1.0, [1.0], [1.0]), 0.5, [0.0])
    assert got[0] == pytest.approx(3 * R2 / 2, abs=1e-15)


def test_linear_form_examples():
    assert synthesize_linear_form(RealCoefficients(T, 1.0, [], []), [0.1, 5.0]) == pytest.approx([1, 1])
    period = 4.0
    got = synthesize_linear_form(RealCoefficients(period, 0.0, [0.0], [1.0]), [period / 4])
    assert got[0] == pytest.approx(1.0, abs=1e-15)
    r = to_fractional(RealCoefficients(T, 0.0, [1.0], [1.0]), 0.5)
    assert synthesize_linear_form(r, [0.0])[0] == pytest.approx(R2, abs=1e-15)


def test_expanded_form_examples():
    c = RealCoefficients(T, 0.0, [1.0], [0.0])
    assert synthesize_expanded_form(c, 1, [0.0])[0] == pytest.approx(math.cos(math.pi / 2), abs=1e-15)
    rng = np.random.default_rng(0)
    c = RealCoefficients(T, 0.3, rng.uniform(-1, 1, 6), rng.uniform(-1, 1, 6))
    t = rng.uniform(0, T, 100)
    np.testing.assert_allclose(synthesize_expanded_form(c, 0.37, t), synthesize_ffs(c, 0.37, t), atol=1e-12)
    np.testing.assert_allclose(synthesize_expanded_form(c, 0, t), synthesize_ffs(c, 0, t), atol=1e-14)


def test_scalar_grid():
    c = RealCoefficients(T, 0.0, [1.0], [0.0])
    assert float(synthesize_ffs(c, 0, 0.0)) == 1.0


@settings(max_examples=50)
@given(coefficient_sets(max_n=16), st.integers(0, 20).map(lambda k: k / 10))
def test_three_forms_agree(c, alpha):
    t = np.linspace(0, T, 256, endpoint=False)
    f = synthesize_ffs(c, alpha, t)
    np.testing.assert_allclose(synthesize_expanded_form(c, alpha, t), f, atol=1e-12)
    np.testing.assert_allclose(synthesize_linear_form(to_fractional(c, alpha), t), f, atol=1e-12)


@given(coefficient_sets(max_n=16))
def test_zero_order_is_classical(c):
    t = np.linspace(0, T, 64, endpoint=False)
    classical = c.a0 + sum(an * np.cos(n * t) + bn * np.sin(n * t) for n, (an, bn) in enumerate(zip(c.a, c.b), 1))
    np.testing.assert_allclose(synthesize_ffs(c, 0, t), classical, atol=1e-12)
    np.testing.assert_array_equal(synthesize_ffs(c, 0, t), synthesize_classical(c, t))


@given(coefficient_sets(max_n=16), st.floats(0, 2))
def test_half_turn(c, alpha):
    t = np.linspace(0, T, 64, endpoint=False)
    np.testing.assert_allclose(synthesize_ffs(c, alpha + 2, t), -synthesize_ffs(c, alpha, t), atol=1e-12)


@given(coefficient_sets(max_n=16, period=3.0), st.floats(0, 2))
def test_periodic(c, alpha):
    t = np.linspace(-1, 1, 32)
    np.testing.assert_allclose(synthesize_ffs(c, alpha, t + 3.0), synthesize_ffs(c, alpha, t), atol=1e-12)


def test_rejects_non_finite_grid():
    with pytest.raises(ValueError):
        synthesize_ffs(RealCoefficients(T, 0.0, [], []), 0, [math.nan])
