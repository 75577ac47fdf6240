"""Complex exponential form of the fractional Fourier series.

Every term, including negative ``n``, carries the same ``exp(i*pi*alpha/2)``
phase; the negative-index coefficients absorb an extra ``exp(-i*pi*alpha)`` so
that a real coefficient set still sums to a real signal.
"""

from __future__ import annotations

import numpy as np

from .synthesis import check_order
from .types import ComplexCoefficients, FractionalOrder, RealCoefficients, as_order

__all__ = ["complex_coefficients", "synthesize_complex"]


def complex_coefficients(
    coeffs: RealCoefficients, order: FractionalOrder | float
) -> ComplexCoefficients:
    """Complex coefficients of the order-alpha series of ``(a0, a_n, b_n)``.

    ``c_0 = a0 cos(p) exp(-i p)``, ``c_n = (a_n - i b_n)/2`` and
    ``c_{-n} = (a_n + i b_n) exp(-2 i p)/2`` for ``n >= 1``, ``p = pi*alpha/2``.
    """
    order = as_order(order)
    check_order(coeffs, order)
    n = coeffs.n_harmonics
    unit = order.unit
    c = np.empty(2 * n + 1, dtype=np.complex128)
    c[n] = coeffs.a0 * order.cos * unit.conjugate()
    c[n + 1 :] = 0.5 * (coeffs.a - 1j * coeffs.b)
    # c_{-m} for m = n..1, stored in ascending index order
    c[:n] = (0.5 * (coeffs.a + 1j * coeffs.b) * unit.conjugate() ** 2)[::-1]
    return ComplexCoefficients(coeffs.period, order, c)


def synthesize_complex(c: ComplexCoefficients, grid) -> np.ndarray:
    """Evaluate ``sum_{n=-N}^{N} c_n exp(i(n w t + pi*alpha/2))``, ascending ``n``."""
    t = np.asarray(grid, dtype=float)
    w = c.omega
    unit = c.order.unit
    out = np.zeros(t.shape, dtype=np.complex128)
    for n, cn in zip(c.indices, c.c):
        out = out + cn * (np.exp(1j * n * w * t) * unit)
    return out
