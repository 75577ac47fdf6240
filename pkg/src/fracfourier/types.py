"""Shared domain types.

Every type is immutable and validates its invariants on construction; arrays
are stored as read-only ``float64`` / ``complex128`` copies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import (
    BasisTagMismatch,
    DegenerateGrid,
    InvalidOrder,
    InvalidPeriod,
    LengthMismatch,
    NonFinite,
    NonOrthogonal,
)

__all__ = [
    "FractionalOrder",
    "BasisTag",
    "LINEAR",
    "RealCoefficients",
    "ComplexCoefficients",
    "SampledSignal",
    "RotationMatrix2",
    "validate",
    "as_order",
]

ORTHO_TOL = 1e-12


def _frozen_array(values, dtype=np.float64) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True).reshape(-1)
    arr.setflags(write=False)
    return arr


def _check_finite(name: str, value) -> None:
    if not np.all(np.isfinite(value)):
        raise NonFinite(f"{name} contains a non-finite value")


def _check_period(period: float) -> None:
    _check_finite("period", period)
    if period <= 0:
        raise InvalidPeriod(f"period must be > 0, got {period!r}")


@dataclass(frozen=True)
class FractionalOrder:
    """The dimension parameter ``alpha >= 0`` and its phase ``pi * alpha / 2``.

    ``cos`` and ``sin`` of the phase are exact at integer ``alpha`` (values in
    {-1, 0, 1}) so that singular and identity cases are detected exactly.
    """

    alpha: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", float(self.alpha))
        self._check()

    def _check(self) -> None:
        if not math.isfinite(self.alpha):
            raise NonFinite(f"alpha must be finite, got {self.alpha!r}")
        if self.alpha < 0:
            raise InvalidOrder(f"alpha must be >= 0, got {self.alpha!r}")

    @property
    def phase(self) -> float:
        return math.pi * self.alpha / 2

    @property
    def cos(self) -> float:
        if self.alpha.is_integer():
            return (1.0, 0.0, -1.0, 0.0)[int(self.alpha) % 4]
        return math.cos(self.phase)

    @property
    def sin(self) -> float:
        if self.alpha.is_integer():
            return (0.0, 1.0, 0.0, -1.0)[int(self.alpha) % 4]
        return math.sin(self.phase)

    @property
    def unit(self) -> complex:
        """``exp(i * pi * alpha / 2)``."""
        return complex(self.cos, self.sin)

    @property
    def dc_singular(self) -> bool:
        """True when ``cos(pi * alpha / 2) == 0`` (odd integer alpha)."""
        return self.cos == 0.0

    def __add__(self, other: FractionalOrder) -> FractionalOrder:
        return FractionalOrder(self.alpha + as_order(other).alpha)


def as_order(order: FractionalOrder | float) -> FractionalOrder:
    """Accept a bare number wherever a :class:`FractionalOrder` is expected."""
    if isinstance(order, FractionalOrder):
        return order
    return FractionalOrder(order)


@dataclass(frozen=True)
class BasisTag:
    """Which basis a real coefficient set is expressed on.

    ``kind == "linear"`` with ``alpha is None``: a plain set (a0, a_n, b_n),
    nothing rotated. ``kind == "linear"`` with ``alpha`` set: the rotated
    linear-basis representation of f(t; alpha). ``kind == "fractional"``:
    coefficients on the phase-shifted basis of order ``alpha``.
    """

    kind: str = "linear"
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "fractional"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", as_order(self.alpha).alpha)
        if self.kind == "fractional" and self.alpha is None:
            raise BasisTagMismatch("a fractional basis tag needs an alpha")

    @classmethod
    def fractional(cls, alpha: FractionalOrder | float) -> BasisTag:
        return cls("fractional", as_order(alpha).alpha)

    @classmethod
    def rotated(cls, alpha: FractionalOrder | float) -> BasisTag:
        return cls("linear", as_order(alpha).alpha)

    @property
    def is_linear(self) -> bool:
        return self.kind == "linear"


LINEAR = BasisTag()


@dataclass(frozen=True, eq=False)
class RealCoefficients:
    """A real Fourier coefficient set ``(a0, a_1..a_N, b_1..b_N)`` with period.

    ``a0`` is the half-amplitude constant coefficient: the series constant is
    ``a0`` on the linear basis and ``a0 * cos(pi*alpha/2)`` on the fractional
    one. The classical ``A0`` of ``A0/2 + sum(...)`` is ``2 * a0``.
    """

    period: float
    a0: float
    a: np.ndarray
    b: np.ndarray
    basis: BasisTag = LINEAR

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", float(self.period))
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "a", _frozen_array(self.a))
        object.__setattr__(self, "b", _frozen_array(self.b))
        self._check()

    def _check(self) -> None:
        _check_period(self.period)
        _check_finite("a0", self.a0)
        _check_finite("a", self.a)
        _check_finite("b", self.b)
        if self.a.shape != self.b.shape:
            raise LengthMismatch(
                f"a and b must have equal length, got {self.a.size} and {self.b.size}"
            )

    @property
    def n_harmonics(self) -> int:
        return int(self.a.size)

    @property
    def omega(self) -> float:
        return 2 * math.pi / self.period

    def replace(self, **changes) -> RealCoefficients:
        kw = dict(period=self.period, a0=self.a0, a=self.a, b=self.b, basis=self.basis)
        kw.update(changes)
        return RealCoefficients(**kw)

    def as_plain(self) -> RealCoefficients:
        """Same numbers, tagged as a plain (unrotated) linear set."""
        return self.replace(basis=LINEAR)

    def padded(self, n_max: int) -> RealCoefficients:
        """Truncate or zero-pad the harmonic lists to ``n_max`` entries."""
        a = np.zeros(n_max)
        b = np.zeros(n_max)
        k = min(n_max, self.n_harmonics)
        a[:k] = self.a[:k]
        b[:k] = self.b[:k]
        return self.replace(a=a, b=b)


@dataclass(frozen=True, eq=False)
class ComplexCoefficients:
    """Complex coefficients ``c_n`` for ``n = -N..N`` of an order-alpha series.

    Stored as an array of length ``2N + 1`` where entry ``j`` holds ``c_{j-N}``.
    """

    period: float
    order: FractionalOrder
    c: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", float(self.period))
        object.__setattr__(self, "order", as_order(self.order))
        object.__setattr__(self, "c", _frozen_array(self.c, np.complex128))
        self._check()

    def _check(self) -> None:
        _check_period(self.period)
        _check_finite("c", self.c)
        if self.c.size % 2 != 1:
            raise LengthMismatch("coefficient array must have odd length 2N+1")

    @classmethod
    def from_mapping(
        cls, period: float, order: FractionalOrder | float, c: Mapping[int, complex]
    ) -> ComplexCoefficients:
        """Build from ``{n: c_n}``; every ``n`` must come with ``-n``."""
        keys = set(c)
        for n in keys:
            if -n not in keys:
                raise LengthMismatch(f"index {n} present without {-n}")
        n_max = max((abs(n) for n in keys), default=0)
        arr = np.zeros(2 * n_max + 1, dtype=np.complex128)
        for n, value in c.items():
            arr[n + n_max] = value
        return cls(period, order, arr)

    @property
    def n_max(self) -> int:
        return (self.c.size - 1) // 2

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.n_max, self.n_max + 1)

    @property
    def omega(self) -> float:
        return 2 * math.pi / self.period

    def __getitem__(self, n: int) -> complex:
        if abs(n) > self.n_max:
            raise KeyError(n)
        return complex(self.c[n + self.n_max])


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """One period of uniform samples; sample ``k`` sits at ``t0 + k*period/M``."""

    values: np.ndarray
    period: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen_array(self.values))
        object.__setattr__(self, "period", float(self.period))
        object.__setattr__(self, "t0", float(self.t0))
        self._check()

    def _check(self) -> None:
        _check_period(self.period)
        _check_finite("t0", self.t0)
        if self.values.size < 2:
            raise DegenerateGrid(f"need at least 2 samples, got {self.values.size}")
        _check_finite("values", self.values)

    @property
    def m(self) -> int:
        return int(self.values.size)

    @property
    def dt(self) -> float:
        return self.period / self.m

    @property
    def omega(self) -> float:
        return 2 * math.pi / self.period

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.m) * self.dt

    @classmethod
    def from_function(cls, func, period: float, m: int, t0: float = 0.0) -> SampledSignal:
        if m < 2:
            raise DegenerateGrid(f"need at least 2 samples, got {m}")
        t = t0 + np.arange(m) * (period / m)
        return cls(np.asarray(func(t), dtype=float) * np.ones_like(t), period, t0)


@dataclass(frozen=True, eq=False)
class RotationMatrix2:
    """A proper 2x2 rotation acting on ``(a_n, b_n)`` column vectors."""

    m: np.ndarray = field(repr=True)

    def __post_init__(self) -> None:
        arr = np.array(self.m, dtype=np.float64, copy=True)
        if arr.shape != (2, 2):
            raise LengthMismatch(f"rotation matrix must be 2x2, got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "m", arr)
        self._check()

    def _check(self) -> None:
        _check_finite("m", self.m)
        if np.max(np.abs(self.m.T @ self.m - np.eye(2))) >= ORTHO_TOL:
            raise NonOrthogonal("matrix is not orthogonal within 1e-12")
        if abs(np.linalg.det(self.m) - 1.0) >= ORTHO_TOL:
            raise NonOrthogonal("matrix determinant differs from 1 by >= 1e-12")

    def __matmul__(self, other):
        if isinstance(other, RotationMatrix2):
            return RotationMatrix2(self.m @ other.m)
        return self.m @ other

    @property
    def T(self) -> RotationMatrix2:
        return RotationMatrix2(self.m.T)


def _array_eq(self, other) -> bool:
    if type(other) is not type(self):
        return NotImplemented
    for name in self.__dataclass_fields__:
        x, y = getattr(self, name), getattr(other, name)
        if isinstance(x, np.ndarray):
            if not np.array_equal(x, y):
                return False
        elif x != y:
            return False
    return True


for _cls in (RealCoefficients, ComplexCoefficients, SampledSignal, RotationMatrix2):
    _cls.__eq__ = _array_eq
    _cls.__hash__ = None


def validate(value):
    """Re-check the invariants of any domain type and return it unchanged."""
    check = getattr(value, "_check", None)
    if check is None:
        raise TypeError(f"{type(value).__name__} is not a validated domain type")
    check()
    return value
