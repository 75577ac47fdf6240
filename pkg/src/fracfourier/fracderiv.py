"""Fractional differentiation of periodic functions as a coefficient transform.

Two variants are provided:

* normalized (default): every harmonic pair is rotated by ``pi*alpha/2`` and
  the constant is multiplied by ``cos(pi*alpha/2)``. This is a pure phase
  shift with unit gain per harmonic.
* scaled: the normalized transform with harmonic ``n`` additionally
  multiplied by ``(n*omega)**alpha``. On zero-mean signals this is the Weyl
  fractional derivative. The constant keeps the ``cos(pi*alpha/2)`` rule.

:func:`weyl_oracle` computes the Weyl derivative independently from samples
through the discrete Fourier transform, for cross-checking.
"""

from __future__ import annotations

import numpy as np

from .errors import NyquistViolation
from .synthesis import synthesize_linear_form
from .types import BasisTag, FractionalOrder, RealCoefficients, SampledSignal, as_order

__all__ = ["frac_derivative_coeffs", "frac_derivative_signal", "weyl_oracle"]


def frac_derivative_coeffs(
    coeffs: RealCoefficients, order: FractionalOrder | float, scaled: bool = False
) -> RealCoefficients:
    """Linear-basis coefficients ``(A'_0, A'_n, B'_n)`` of ``D^alpha f``.

    ``coeffs`` holds the classical series of ``f`` (``a0`` is ``A0/2``).
    """
    order = as_order(order)
    c, s = order.cos, order.sin
    a = coeffs.a * c + coeffs.b * s
    b = coeffs.b * c - coeffs.a * s
    if scaled and order.alpha != 0:
        gain = (np.arange(1, coeffs.n_harmonics + 1) * coeffs.omega) ** order.alpha
        a = a * gain
        b = b * gain
    return coeffs.replace(a0=coeffs.a0 * c, a=a, b=b, basis=BasisTag.rotated(order))


def frac_derivative_signal(
    coeffs: RealCoefficients, order: FractionalOrder | float, scaled: bool, grid
) -> np.ndarray:
    """Evaluate ``D^alpha f`` on ``grid`` via :func:`frac_derivative_coeffs`."""
    return synthesize_linear_form(frac_derivative_coeffs(coeffs, order, scaled), grid)


def weyl_oracle(signal: SampledSignal, order: FractionalOrder | float) -> np.ndarray:
    """Weyl fractional derivative of a sampled periodic signal.

    Each DFT bin ``k`` is multiplied by ``(i k omega)**alpha`` (principal
    branch), the mean is removed and the Nyquist bin of an even-length grid is
    dropped. The result is sampled on the signal's own grid.

    Raises
    ------
    NyquistViolation
        If fewer than 4 samples are given.
    """
    order = as_order(order)
    m = signal.m
    if m < 4:
        raise NyquistViolation(f"the Weyl oracle needs at least 4 samples, got {m}")
    if order.alpha == 0:
        return signal.values.copy()
    spectrum = np.fft.rfft(signal.values)
    k = np.arange(spectrum.size)
    multiplier = (k * signal.omega) ** order.alpha * order.unit
    multiplier[0] = 0.0
    if m % 2 == 0:
        multiplier[-1] = 0.0
    # rfft phases are relative to t0; the multiplier commutes with translation
    return np.fft.irfft(spectrum * multiplier, n=m)
