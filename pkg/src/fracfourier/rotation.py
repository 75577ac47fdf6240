"""Coefficient-domain rotation between the linear and fractional bases."""

from __future__ import annotations

import warnings

import numpy as np

from .errors import BasisTagMismatch, DCUndeterminedWarning, SingularDC
from .types import (
    LINEAR,
    BasisTag,
    FractionalOrder,
    RealCoefficients,
    RotationMatrix2,
    as_order,
)

__all__ = ["rotation_matrix", "to_fractional", "from_fractional", "compose_check", "DC_ZERO_TOL"]

# |A0| at or below this counts as zero when a0 is unidentifiable
DC_ZERO_TOL = 1e-12


def rotation_matrix(order: FractionalOrder | float) -> RotationMatrix2:
    """Clockwise rotation by ``pi*alpha/2``: ``[[c, s], [-s, c]]``."""
    order = as_order(order)
    c, s = order.cos, order.sin
    return RotationMatrix2([[c, s], [-s, c]])


def _rotate_pairs(a: np.ndarray, b: np.ndarray, c: float, s: float):
    return a * c + b * s, b * c - a * s


def to_fractional(coeffs: RealCoefficients, order: FractionalOrder | float) -> RealCoefficients:
    """Map ``(a0, a_n, b_n)`` to the linear-basis coefficients of f(t; alpha).

    The result's constant term is ``A0/2 = a0*cos(pi*alpha/2)`` and each
    harmonic pair is rotated by :func:`rotation_matrix`. The output stays on
    the linear basis; the tag records the accumulated harmonic rotation.
    """
    if not coeffs.basis.is_linear:
        raise BasisTagMismatch(
            "to_fractional needs linear-basis coefficients; "
            "use .as_plain() on coefficients obtained on the fractional basis"
        )
    order = as_order(order)
    c, s = order.cos, order.sin
    big_a, big_b = _rotate_pairs(coeffs.a, coeffs.b, c, s)
    done = 0.0 if coeffs.basis.alpha is None else coeffs.basis.alpha
    return coeffs.replace(
        a0=coeffs.a0 * c, a=big_a, b=big_b, basis=BasisTag.rotated(done + order.alpha)
    )


def from_fractional(coeffs: RealCoefficients, order: FractionalOrder | float) -> RealCoefficients:
    """Invert :func:`to_fractional`.

    Raises :class:`SingularDC` at odd integer alpha when the constant term is
    non-zero. When it is zero there, ``a0`` is returned as 0 and a
    :class:`DCUndeterminedWarning` is emitted.
    """
    order = as_order(order)
    if not coeffs.basis.is_linear:
        raise BasisTagMismatch("from_fractional needs linear-basis (rotated) coefficients")
    if coeffs.basis.alpha is not None and coeffs.basis.alpha != order.alpha:
        raise BasisTagMismatch(
            f"coefficients were rotated by alpha={coeffs.basis.alpha}, not {order.alpha}"
        )
    c, s = order.cos, order.sin
    a, b = _rotate_pairs(coeffs.a, coeffs.b, c, -s)
    if order.dc_singular:
        if abs(coeffs.a0) > DC_ZERO_TOL:
            raise SingularDC(
                f"cos(pi*alpha/2) = 0 at alpha={order.alpha}; a0 cannot be recovered "
                f"from a non-zero constant term {2 * coeffs.a0!r}"
            )
        warnings.warn(
            f"a0 is not identifiable at alpha={order.alpha}; returning 0",
            DCUndeterminedWarning,
            stacklevel=2,
        )
        a0 = 0.0
    else:
        a0 = coeffs.a0 / c
    return coeffs.replace(a0=a0, a=a, b=b, basis=LINEAR)


def compose_check(order1: FractionalOrder | float, order2: FractionalOrder | float) -> RotationMatrix2:
    return rotation_matrix(order1) @ rotation_matrix(order2)
