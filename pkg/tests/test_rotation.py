import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from fracfourier import (
    BasisTagMismatch,
    DCUndeterminedWarning,
    RealCoefficients,
    SingularDC,
    compose_check,
    from_fractional,
    rotation_matrix,
    to_fractional,
)
from fracfourier.types import BasisTag

H = math.sqrt(2) / 2
alphas = st.floats(0, 4, allow_nan=False)
unit = st.floats(-1, 1, allow_nan=False)


@st.composite
def coefficient_sets(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    a = draw(arrays(float, n, elements=unit))
    b = draw(arrays(float, n, elements=unit))
    return RealCoefficients(2 * math.pi, draw(unit), a, b)


@pytest.mark.parametrize(
    "alpha, expected",
    [(0, [[1, 0], [0, 1]]), (0.5, [[H, H], [-H, H]]), (2, [[-1, 0], [0, -1]]), (1, [[0, 1], [-1, 0]])],
)
def test_rotation_matrix(alpha, expected):
    np.testing.assert_allclose(rotation_matrix(alpha).m, expected, atol=1e-15)


def test_to_fractional_examples():
    r = to_fractional(RealCoefficients(2 * math.pi, 1.0, [1.0], [0.0]), 0)
    # stored a0 is A0/2, so A0 = 2
    assert 2 * r.a0 == 2.0 and list(r.a) == [1.0] and list(r.b) == [0.0]

    r = to_fractional(RealCoefficients(2 * math.pi, 0.0, [1.0], [1.0]), 0.5)
    assert r.a0 == 0.0
    assert r.a[0] == pytest.approx(math.sqrt(2), abs=1e-15)
    assert r.b[0] == pytest.approx(0.0, abs=1e-15)

    r = to_fractional(RealCoefficients(2 * math.pi, 0.0, [1.0], [0.0]), 1)
    assert (r.a0, r.a[0], r.b[0]) == (0.0, 0.0, -1.0)
    assert r.basis == BasisTag.rotated(1.0)


def test_to_fractional_rejects_fractional_tag():
    c = RealCoefficients(1.0, 0.0, [1.0], [0.0], BasisTag.fractional(0.5))
    with pytest.raises(BasisTagMismatch):
        to_fractional(c, 0.5)
    to_fractional(c.as_plain(), 0.5)


def test_from_fractional_examples():
    c = RealCoefficients(1.0, 0.5, [1, 2], [3, 4])
    back = from_fractional(to_fractional(c, 0.7), 0.7)
    assert back.a0 == pytest.approx(0.5, abs=1e-12)
    np.testing.assert_allclose(back.a, [1, 2], atol=1e-12)
    np.testing.assert_allclose(back.b, [3, 4], atol=1e-12)

    with pytest.raises(SingularDC):
        from_fractional(RealCoefficients(1.0, 0.5, [0.0], [-1.0]), 1)

    got = from_fractional(RealCoefficients(1.0, 1.0, [1.0], [0.0]), 0)
    assert (got.a0, got.a[0], got.b[0]) == (1.0, 1.0, 0.0)


def test_from_fractional_zero_dc_at_singular_order_warns():
    with pytest.warns(DCUndeterminedWarning):
        got = from_fractional(RealCoefficients(1.0, 0.0, [0.0], [-1.0]), 3)
    assert got.a0 == 0.0
    np.testing.assert_allclose([got.a[0], got.b[0]], [-1.0, 0.0], atol=1e-15)


def test_from_fractional_checks_recorded_order():
    rotated = to_fractional(RealCoefficients(1.0, 1.0, [1.0], [0.0]), 0.3)
    with pytest.raises(BasisTagMismatch):
        from_fractional(rotated, 0.4)


@pytest.mark.parametrize(
    "a1, a2, a12", [(0.3, 0.7, 1.0), (0.0, 1.37, 1.37), (1.0, 1.0, 2.0)]
)
def test_compose(a1, a2, a12):
    np.testing.assert_allclose(compose_check(a1, a2).m, rotation_matrix(a12).m, atol=1e-12)


def test_group_law_on_grid():
    grid = np.round(np.arange(0, 4.0 + 1e-9, 0.1), 10)
    for a1 in grid:
        for a2 in grid:
            diff = compose_check(a1, a2).m - rotation_matrix(a1 + a2).m
            assert np.max(np.abs(diff)) < 1e-12


@given(coefficient_sets(), alphas)
def test_parseval_per_harmonic(c, alpha):
    r = to_fractional(c, alpha)
    np.testing.assert_allclose(r.a**2 + r.b**2, c.a**2 + c.b**2, atol=1e-12)


@given(coefficient_sets(), alphas)
def test_round_trip(c, alpha):
    r = to_fractional(c, alpha)
    if rotation_matrix(alpha).m[0, 0] == 0:
        # harmonics survive at every order
        r = r.replace(a0=0.0)
        with pytest.warns(DCUndeterminedWarning):
            back = from_fractional(r, alpha)
    else:
        back = from_fractional(r, alpha)
        assert back.a0 == pytest.approx(c.a0, abs=1e-12)
        np.testing.assert_allclose(to_fractional(back, alpha).a, r.a, atol=1e-12)
    np.testing.assert_allclose(back.a, c.a, atol=1e-12)
    np.testing.assert_allclose(back.b, c.b, atol=1e-12)


@given(coefficient_sets())
def test_two_quarter_turns_negate_harmonics(c):
    twice = to_fractional(to_fractional(c, 1), 1)
    np.testing.assert_allclose(twice.a, -c.a, atol=1e-12)
    np.testing.assert_allclose(twice.b, -c.b, atol=1e-12)


@given(coefficient_sets())
def test_zero_order_is_identity(c):
    r = to_fractional(c, 0)
    assert r.a0 == c.a0
    np.testing.assert_array_equal(r.a, c.a)
    np.testing.assert_array_equal(r.b, c.b)
