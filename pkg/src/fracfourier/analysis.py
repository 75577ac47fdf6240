"""Coefficient extraction from one period of uniform samples.

Integrals use the trapezoidal rule on the endpoint-exclusive periodic grid,
which reduces to ``(T/M) * sum(f_k * w(t_k))`` and is exact for trigonometric
integrands of degree below ``M``.
"""

from __future__ import annotations

import warnings
from typing import Callable

import numpy as np

from .errors import DCUndeterminedWarning, NyquistViolation, SingularDC
from .rotation import DC_ZERO_TOL
from .types import BasisTag, FractionalOrder, RealCoefficients, SampledSignal, as_order

__all__ = ["periodic_integral", "analyze_classical", "analyze_fractional"]


def periodic_integral(signal: SampledSignal, weight: Callable | None = None) -> float:
    """Integrate ``signal * weight`` over one period.

    ``weight`` is called once with the array of sample times; ``None`` means
    a weight of one.
    """
    values = signal.values
    if weight is not None:
        values = values * np.broadcast_to(np.asarray(weight(signal.times), dtype=float), values.shape)
    return float(signal.dt * np.sum(values))


def _check_nyquist(signal: SampledSignal, n_max: int) -> None:
    if n_max < 0 or int(n_max) != n_max:
        raise ValueError(f"n_max must be a non-negative integer, got {n_max!r}")
    if 2 * n_max >= signal.m:
        raise NyquistViolation(
            f"n_max={n_max} needs more than {2 * n_max} samples per period, got {signal.m}"
        )


def _projections(signal: SampledSignal, n_max: int, phase: float):
    w = signal.omega
    scale = 2.0 / signal.period
    a = np.array(
        [scale * periodic_integral(signal, lambda t, n=n: np.cos(n * w * t + phase)) for n in range(1, n_max + 1)]
    )
    b = np.array(
        [scale * periodic_integral(signal, lambda t, n=n: np.sin(n * w * t + phase)) for n in range(1, n_max + 1)]
    )
    return a.reshape(-1), b.reshape(-1)


def analyze_classical(signal: SampledSignal, n_max: int) -> RealCoefficients:
    """Classical Fourier coefficients of ``signal`` up to harmonic ``n_max``.

    Returns ``a0 = (1/T) int f`` (i.e. ``A0/2``), ``a_k = (2/T) int f cos(k w t)``
    and ``b_k = (2/T) int f sin(k w t)``.

    Raises
    ------
    NyquistViolation
        If ``n_max >= M/2``.
    """
    _check_nyquist(signal, n_max)
    a0 = periodic_integral(signal) / signal.period
    a, b = _projections(signal, n_max, 0.0)
    return RealCoefficients(signal.period, a0, a, b)


def analyze_fractional(
    signal: SampledSignal, order: FractionalOrder | float, n_max: int
) -> RealCoefficients:
    """Project samples of f(t; alpha) onto the order-alpha fractional basis.

    The harmonic coefficients are ``(2/T) int f cos(k w t + p)`` and
    ``(2/T) int f sin(k w t + p)``, ``p = pi*alpha/2``. The constant satisfies
    ``a0 * cos(p) = (1/T) int f``. At odd integer alpha the constant is not
    identifiable: a vanishing mean gives ``a0 = 0`` with a
    :class:`DCUndeterminedWarning`, a non-vanishing one raises
    :class:`SingularDC`.
    """
    order = as_order(order)
    _check_nyquist(signal, n_max)
    mean = periodic_integral(signal) / signal.period
    if order.dc_singular:
        scale = max(1.0, float(np.max(np.abs(signal.values))))
        if abs(mean) > DC_ZERO_TOL * scale:
            raise SingularDC(
                f"signal mean {mean!r} cannot be represented at alpha={order.alpha}"
            )
        warnings.warn(
            f"a0 is not identifiable at alpha={order.alpha}; returning 0",
            DCUndeterminedWarning,
            stacklevel=2,
        )
        a0 = 0.0
    else:
        a0 = mean / order.cos
    a, b = _projections(signal, n_max, order.phase)
    return RealCoefficients(signal.period, a0, a, b, basis=BasisTag.fractional(order))
