"""Pointwise evaluation of the fractional basis functions.

The fractional basis of order alpha is the classical trigonometric basis with
every phase advanced by ``pi * alpha / 2``; the ``1/(n*omega)**alpha``
normalisation is already applied, so all functions here have unit amplitude.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NonPositiveHarmonic
from .types import FractionalOrder, as_order

__all__ = [
    "frac_basis_dc",
    "frac_basis_cos",
    "frac_basis_sin",
    "complex_basis",
    "conjugate_symmetry_defect",
]


def _check_harmonic(n: int) -> None:
    if int(n) != n or n < 1:
        raise NonPositiveHarmonic(f"harmonic index must be an integer >= 1, got {n!r}")


def _check_omega(omega: float) -> None:
    if not omega > 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")


def frac_basis_dc(order: FractionalOrder | float) -> float:
    """Constant basis function of order alpha, ``cos(pi*alpha/2)``."""
    return as_order(order).cos


def frac_basis_cos(n: int, omega: float, order: FractionalOrder | float, t):
    """``cos(n*omega*t + pi*alpha/2)``; ``t`` may be a scalar or an array."""
    _check_harmonic(n)
    _check_omega(omega)
    return np.cos(n * omega * np.asarray(t, dtype=float) + as_order(order).phase)


def frac_basis_sin(n: int, omega: float, order: FractionalOrder | float, t):
    """``sin(n*omega*t + pi*alpha/2)``; ``t`` may be a scalar or an array."""
    _check_harmonic(n)
    _check_omega(omega)
    return np.sin(n * omega * np.asarray(t, dtype=float) + as_order(order).phase)


def complex_basis(n: int, omega: float, order: FractionalOrder | float, t):
    """``exp(i*(n*omega*t + pi*alpha/2))`` for any integer ``n``.

    The phase ``+pi*alpha/2`` is the same for negative ``n``, which is why
    ``complex_basis(-n, ...)`` is in general *not* the conjugate of
    ``complex_basis(n, ...)``. For ``n == 0`` the value is ``exp(i*pi*alpha/2)``
    independent of ``t``.
    """
    _check_omega(omega)
    order = as_order(order)
    t = np.asarray(t, dtype=float)
    if n == 0:
        return order.unit * np.ones_like(t, dtype=np.complex128)[()]
    return np.exp(1j * (n * omega * t + order.phase))


def conjugate_symmetry_defect(n: int, order: FractionalOrder | float) -> float:
    """Sup over t of ``|phi_{-n}(t) - conj(phi_n(t))|``, i.e. ``2|sin(pi*alpha/2)|``."""
    _check_harmonic(n)
    return 2.0 * abs(as_order(order).sin)
