"""Evaluation of the fractional Fourier series in its three real forms.

All sums run over ascending harmonic index, cosine terms before sine terms,
so results are reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

from .errors import BasisTagMismatch
from .types import FractionalOrder, RealCoefficients, as_order

__all__ = [
    "synthesize_ffs",
    "synthesize_linear_form",
    "synthesize_expanded_form",
    "synthesize_classical",
]


def _grid(grid) -> np.ndarray:
    t = np.asarray(grid, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("time grid contains non-finite values")
    return t


def check_order(coeffs: RealCoefficients, order: FractionalOrder) -> None:
    """Reject a fractional-basis set being evaluated at a different order."""
    tag = coeffs.basis
    if tag.kind == "fractional" and tag.alpha != order.alpha:
        raise BasisTagMismatch(
            f"coefficients live on the order-{tag.alpha} basis, evaluated at {order.alpha}"
        )


def synthesize_ffs(coeffs: RealCoefficients, order: FractionalOrder | float, grid) -> np.ndarray:
    """Evaluate ``a0 cos(p) + sum a_n cos(n w t + p) + sum b_n sin(n w t + p)``
    with ``p = pi*alpha/2`` at every point of ``grid``."""
    order = as_order(order)
    check_order(coeffs, order)
    t = _grid(grid)
    w, p = coeffs.omega, order.phase
    out = np.full(t.shape, coeffs.a0 * order.cos)
    for n, an in enumerate(coeffs.a, start=1):
        out = out + an * np.cos(n * w * t + p)
    for n, bn in enumerate(coeffs.b, start=1):
        out = out + bn * np.sin(n * w * t + p)
    return out


def synthesize_linear_form(coeffs: RealCoefficients, grid) -> np.ndarray:
    """Evaluate the classical form ``A0/2 + sum A_n cos(n w t) + sum B_n sin(n w t)``.

    The constant term is ``coeffs.a0`` (which stores ``A0/2``).
    """
    t = _grid(grid)
    w = coeffs.omega
    out = np.full(t.shape, coeffs.a0)
    for n, an in enumerate(coeffs.a, start=1):
        out = out + an * np.cos(n * w * t)
    for n, bn in enumerate(coeffs.b, start=1):
        out = out + bn * np.sin(n * w * t)
    return out


# at alpha == 0 the FFS is the classical series
synthesize_classical = synthesize_linear_form


def synthesize_expanded_form(
    coeffs: RealCoefficients, order: FractionalOrder | float, grid
) -> np.ndarray:
    """Evaluate the series after expanding each phase-shifted sinusoid by the
    angle-addition formulas, term by term. Used to cross-check the other forms."""
    order = as_order(order)
    check_order(coeffs, order)
    t = _grid(grid)
    w, c, s = coeffs.omega, order.cos, order.sin
    out = np.full(t.shape, coeffs.a0 * c)
    for n, (an, bn) in enumerate(zip(coeffs.a, coeffs.b), start=1):
        out = out + (an * c + bn * s) * np.cos(n * w * t)
    for n, (an, bn) in enumerate(zip(coeffs.a, coeffs.b), start=1):
        out = out + (bn * c - an * s) * np.sin(n * w * t)
    return out
