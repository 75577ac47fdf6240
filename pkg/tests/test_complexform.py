import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracfourier import (
    ComplexCoefficients,
    RealCoefficients,
    complex_basis,
    complex_coefficients,
    synthesize_complex,
    synthesize_ffs,
)
from strategies import coefficient_sets

T = 2 * math.pi


def test_coefficient_examples():
    assert complex_coefficients(RealCoefficients(T, 1.0, [], []), 0)[0] == 1.0
    for alpha in (0, 0.3, 1.7):
        c = complex_coefficients(RealCoefficients(T, 0.0, [1.0], [0.0]), alpha)
        assert c[1] == 0.5
    c = complex_coefficients(RealCoefficients(T, 0.0, [1.0], [0.0]), 1)
    assert c[-1] == pytest.approx(-0.5, abs=1e-16)


def test_coefficients_hand_computed():
    alpha = 0.6
    p = math.pi * alpha / 2
    c = complex_coefficients(RealCoefficients(T, 0.7, [1.0, 2.0], [3.0, -1.0]), alpha)
    assert c[0] == pytest.approx(0.7 * math.cos(p) * cmath.exp(-1j * p), abs=1e-15)
    assert c[2] == pytest.approx((2.0 + 1j) / 2, abs=1e-15)
    assert c[-1] == pytest.approx((1.0 + 3j) / 2 * cmath.exp(-2j * p), abs=1e-15)
    assert c[-2] == pytest.approx((2.0 - 1j) / 2 * cmath.exp(-2j * p), abs=1e-15)


def test_synthesis_examples():
    c = ComplexCoefficients.from_mapping(T, 0, {0: 1.0})
    np.testing.assert_allclose(synthesize_complex(c, [0.0, 1.0]), [1, 1], atol=0)
    z = synthesize_complex(complex_coefficients(RealCoefficients(T, 0.0, [1.0], [0.0]), 0), [0.0])
    assert z[0] == pytest.approx(1.0 + 0j, abs=1e-15)


def test_synthesis_matches_direct_term_sum():
    c = ComplexCoefficients.from_mapping(2.0, 0.4, {-1: 1 + 2j, 0: 0.5j, 1: -1.0})
    t = 0.3
    want = sum(c[n] * complex_basis(n, math.pi, 0.4, t) for n in (-1, 0, 1))
    assert synthesize_complex(c, [t])[0] == pytest.approx(want, abs=1e-15)


@settings(max_examples=60)
@given(coefficient_sets(max_n=8), st.sampled_from([0, 0.5, 1, 1.5, 2, 0.6]))
def test_real_equivalence(c, alpha):
    t = np.linspace(0, T, 128, endpoint=False)
    z = synthesize_complex(complex_coefficients(c, alpha), t)
    np.testing.assert_allclose(z.real, synthesize_ffs(c, alpha, t), atol=1e-12)
    assert np.max(np.abs(z.imag), initial=0.0) < 1e-12


@given(coefficient_sets(max_n=8, min_n=1))
def test_hermitian_at_zero_order(c):
    cc = complex_coefficients(c, 0)
    for n in range(1, c.n_harmonics + 1):
        assert abs(cc[n] - np.conj(cc[-n])) < 1e-14


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5])
def test_terms_not_conjugate_but_sum_real(alpha):
    c = RealCoefficients(T, 0.0, [1.0], [0.5])
    cc = complex_coefficients(c, alpha)
    t = np.linspace(0, T, 16)
    plus = cc[1] * complex_basis(1, 1.0, alpha, t)
    minus = cc[-1] * complex_basis(-1, 1.0, alpha, t)
    # term pairs are conjugate even though the basis pair is not
    np.testing.assert_allclose(minus, np.conj(plus), atol=1e-14)
    # while the bare coefficients are not conjugate unless alpha is even
    assert abs(cc[-1] - np.conj(cc[1])) > 0.1
    assert np.max(np.abs((plus + minus).imag)) < 1e-14
