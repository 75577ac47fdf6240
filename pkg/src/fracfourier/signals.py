"""Standard periodic test signals with closed-form Fourier coefficients.

Waveform conventions (``A`` = amplitude, ``u`` = phase within the period):

* square: ``+A`` on ``0 < u < 1/2``, ``-A`` on ``1/2 < u < 1`` (odd).
* sawtooth: ``2 A u`` for ``-1/2 <= u < 1/2`` (odd, jump at ``u = 1/2``).
* triangle: ``A (1 - 4|u|)`` for ``|u| <= 1/2`` (even, peak ``A`` at 0, zero mean).

Samples falling exactly on a jump take the midpoint of the two one-sided
limits, which is where the Fourier series converges.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateGrid, InvalidPeriod, LengthMismatch, NonFinite, UnsupportedKind
from .synthesis import synthesize_linear_form
from .types import RealCoefficients, SampledSignal

__all__ = ["SignalKind", "SignalSpec", "sample", "analytic_coefficients"]

# phase offsets this close to a jump are treated as on it
_JUMP_TOL = 1e-12


class SignalKind(enum.Enum):
    Square = "square"
    Sawtooth = "sawtooth"
    Triangle = "triangle"
    TrigPolynomial = "trigpoly"


@dataclass(frozen=True)
class SignalSpec:
    kind: SignalKind
    period: float = 2 * math.pi
    amplitude: float = 1.0
    a0: float = 0.0
    a: tuple[float, ...] = field(default_factory=tuple)
    b: tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "kind", SignalKind(self.kind))
        except ValueError:
            raise UnsupportedKind(f"unknown signal kind {self.kind!r}") from None
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))
        if not math.isfinite(self.period) or not math.isfinite(self.amplitude):
            raise NonFinite("period and amplitude must be finite")
        if self.period <= 0:
            raise InvalidPeriod(f"period must be > 0, got {self.period!r}")
        if len(self.a) != len(self.b):
            raise LengthMismatch("trig polynomial coefficient lists differ in length")

    @classmethod
    def trig_polynomial(cls, a0: float, a, b, period: float = 2 * math.pi) -> SignalSpec:
        return cls(SignalKind.TrigPolynomial, period=period, a0=a0, a=tuple(a), b=tuple(b))


def _square(u: np.ndarray) -> np.ndarray:
    out = np.where(u < 0.5, 1.0, -1.0)
    on_jump = np.isclose(u, 0.0, atol=_JUMP_TOL) | np.isclose(u, 0.5, atol=_JUMP_TOL) | np.isclose(
        u, 1.0, atol=_JUMP_TOL
    )
    return np.where(on_jump, 0.0, out)


def _sawtooth(u: np.ndarray) -> np.ndarray:
    w = np.mod(u + 0.5, 1.0) - 0.5
    on_jump = np.isclose(np.abs(w), 0.5, atol=_JUMP_TOL)
    return np.where(on_jump, 0.0, 2.0 * w)


def _triangle(u: np.ndarray) -> np.ndarray:
    w = np.mod(u + 0.5, 1.0) - 0.5
    return 1.0 - 4.0 * np.abs(w)


def sample(spec: SignalSpec, m: int, t0: float = 0.0) -> SampledSignal:
    """Sample one period ``[t0, t0 + T)`` of ``spec`` at ``m`` uniform points."""
    if m < 2:
        raise DegenerateGrid(f"need at least 2 samples, got {m}")
    k = np.arange(m)
    if spec.kind is SignalKind.TrigPolynomial:
        t = t0 + k * (spec.period / m)
        values = synthesize_linear_form(_own_coefficients(spec), t)
        return SampledSignal(values, spec.period, t0)
    # phase within the period computed from k directly to keep jump points exact
    u = np.mod(t0 / spec.period + k / m, 1.0)
    shape = {SignalKind.Square: _square, SignalKind.Sawtooth: _sawtooth, SignalKind.Triangle: _triangle}
    return SampledSignal(spec.amplitude * shape[spec.kind](u), spec.period, t0)


def _own_coefficients(spec: SignalSpec) -> RealCoefficients:
    return RealCoefficients(spec.period, spec.a0, spec.a, spec.b)


def analytic_coefficients(spec: SignalSpec, n_max: int) -> RealCoefficients:
    """Exact classical coefficients of ``spec`` up to harmonic ``n_max``.

    Square: b_n = 4A/(n pi), odd n. Sawtooth: b_n = 2A(-1)^(n+1)/(n pi).
    Triangle: a_n = 8A/(n pi)^2, odd n. A trig polynomial returns its own
    coefficients, truncated or zero-padded.
    """
    n = np.arange(1, n_max + 1, dtype=float)
    odd = (np.arange(1, n_max + 1) % 2) == 1
    amp = spec.amplitude
    zeros = np.zeros(n_max)
    if spec.kind is SignalKind.Square:
        # (2/T) int_0^{T/2} 2A sin(n w t) dt = 2A (1 - cos(n pi)) / (n pi)
        return RealCoefficients(spec.period, 0.0, zeros, np.where(odd, 4 * amp / (n * math.pi), 0.0))
    if spec.kind is SignalKind.Sawtooth:
        # (2/T) int_{-T/2}^{T/2} (2A t/T) sin(n w t) dt, by parts
        sign = np.where(odd, 1.0, -1.0)
        return RealCoefficients(spec.period, 0.0, zeros, 2 * amp * sign / (n * math.pi))
    if spec.kind is SignalKind.Triangle:
        # (4/T) int_0^{T/2} A (1 - 4t/T) cos(n w t) dt = 4A (1 - cos(n pi)) / (n pi)^2
        return RealCoefficients(spec.period, 0.0, np.where(odd, 8 * amp / (n * math.pi) ** 2, 0.0), zeros)
    if spec.kind is SignalKind.TrigPolynomial:
        return _own_coefficients(spec).padded(n_max)
    raise UnsupportedKind(f"no closed form for {spec.kind!r}")
