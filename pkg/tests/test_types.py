import math

import numpy as np
import pytest

from fracfourier import (
    BasisTag,
    ComplexCoefficients,
    DegenerateGrid,
    FractionalOrder,
    InvalidOrder,
    InvalidPeriod,
    LengthMismatch,
    NonFinite,
    NonOrthogonal,
    RealCoefficients,
    RotationMatrix2,
    SampledSignal,
    validate,
)


def test_well_formed_coefficients_accepted():
    c = RealCoefficients(2 * math.pi, 0.0, [1.0], [0.0])
    assert validate(c) is c
    assert c.n_harmonics == 1
    assert c.omega == pytest.approx(1.0)
    assert c.basis.is_linear and c.basis.alpha is None


@pytest.mark.parametrize("period", [-1.0, 0.0])
def test_invalid_period(period):
    with pytest.raises(InvalidPeriod):
        RealCoefficients(period, 0.0, [1.0], [0.0])


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        RealCoefficients(1.0, 0.0, [1.0, 2.0], [0.0])


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(period=math.inf, a0=0.0, a=[1.0], b=[0.0]),
        dict(period=1.0, a0=math.nan, a=[1.0], b=[0.0]),
        dict(period=1.0, a0=0.0, a=[math.inf], b=[0.0]),
        dict(period=1.0, a0=0.0, a=[0.0], b=[math.nan]),
    ],
)
def test_non_finite_rejected(kwargs):
    with pytest.raises(NonFinite):
        RealCoefficients(**kwargs)


def test_coefficients_are_immutable():
    c = RealCoefficients(1.0, 0.0, [1.0], [2.0])
    with pytest.raises(ValueError):
        c.a[0] = 5.0
    with pytest.raises(AttributeError):
        c.a0 = 1.0


def test_empty_harmonics_allowed():
    assert RealCoefficients(1.0, 3.0, [], []).n_harmonics == 0


def test_padded_truncates_and_extends():
    c = RealCoefficients(1.0, 1.0, [1, 2, 3], [4, 5, 6])
    assert list(c.padded(2).a) == [1, 2]
    assert list(c.padded(5).b) == [4, 5, 6, 0, 0]


def test_order_phase_and_exact_trig():
    o = FractionalOrder(0.5)
    assert o.phase == math.pi * 0.5 / 2
    assert FractionalOrder(1).cos == 0.0 and FractionalOrder(1).sin == 1.0
    assert FractionalOrder(2).cos == -1.0 and FractionalOrder(3).sin == -1.0
    assert FractionalOrder(1).dc_singular and not FractionalOrder(0.999).dc_singular


@pytest.mark.parametrize("alpha", [-0.1, -2.0])
def test_negative_order_rejected(alpha):
    with pytest.raises(InvalidOrder):
        FractionalOrder(alpha)


@pytest.mark.parametrize("alpha", [math.nan, math.inf])
def test_non_finite_order_rejected(alpha):
    with pytest.raises(NonFinite):
        FractionalOrder(alpha)


def test_sampled_signal_grid():
    s = SampledSignal([1.0, 2.0, 3.0, 4.0], period=2.0, t0=1.0)
    assert s.m == 4
    assert s.dt == 0.5
    np.testing.assert_array_equal(s.times, [1.0, 1.5, 2.0, 2.5])


def test_sampled_signal_needs_two_samples():
    with pytest.raises(DegenerateGrid):
        SampledSignal([1.0], period=1.0)
    with pytest.raises(NonFinite):
        SampledSignal([1.0, math.nan], period=1.0)


def test_rotation_matrix_invariants():
    c, s = math.cos(0.3), math.sin(0.3)
    RotationMatrix2([[c, s], [-s, c]])
    with pytest.raises(NonOrthogonal):
        RotationMatrix2([[1.0, 0.0], [0.0, -1.0]])  # reflection, det -1
    with pytest.raises(NonOrthogonal):
        RotationMatrix2([[1.0, 1e-9], [0.0, 1.0]])
    with pytest.raises(LengthMismatch):
        RotationMatrix2(np.eye(3))


def test_complex_coefficients_symmetric_indices():
    c = ComplexCoefficients.from_mapping(1.0, 0.5, {-1: 1j, 0: 2.0, 1: 3.0})
    assert c.n_max == 1
    assert c[-1] == 1j and c[0] == 2.0 and c[1] == 3.0
    with pytest.raises(LengthMismatch):
        ComplexCoefficients.from_mapping(1.0, 0.5, {0: 1.0, 2: 1.0})
    with pytest.raises(LengthMismatch):
        ComplexCoefficients(1.0, 0.0, [1.0, 2.0])
    with pytest.raises(NonFinite):
        ComplexCoefficients(1.0, 0.0, [complex(math.inf, 0)])


def test_fractional_tag_requires_alpha():
    assert BasisTag.fractional(0.5).alpha == 0.5
    with pytest.raises(ValueError):
        BasisTag("fractional", None)
    with pytest.raises(ValueError):
        BasisTag("sideways")


def test_validate_rejects_foreign_objects():
    with pytest.raises(TypeError):
        validate(3.0)
