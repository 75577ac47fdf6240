"""Self-check suite: numerical properties the library must satisfy.

Each property returns the largest observed error; it passes when that error
is at most ``tolerance * slack``. ``slack`` is 1 for identities that hold to
round-off and larger for properties whose natural scale is bigger (the Weyl
oracle works with amplitudes up to ``N**alpha``).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analysis import analyze_classical, analyze_fractional, periodic_integral
from .basis import complex_basis, conjugate_symmetry_defect, frac_basis_cos, frac_basis_sin
from .complexform import complex_coefficients, synthesize_complex
from .fracderiv import frac_derivative_coeffs, frac_derivative_signal, weyl_oracle
from .rotation import compose_check, from_fractional, rotation_matrix, to_fractional
from .synthesis import synthesize_expanded_form, synthesize_ffs, synthesize_linear_form
from .types import RealCoefficients, SampledSignal

__all__ = ["Property", "PropertyResult", "PROPERTIES", "run", "format_report", "random_coeffs"]

DEFAULT_SEED = 42
DEFAULT_TOLERANCE = 1e-10


def random_coeffs(
    rng: np.random.Generator, n_max: int, period: float = 2 * math.pi, dc: bool = True
) -> RealCoefficients:
    n = int(rng.integers(1, n_max + 1))
    a0 = float(rng.uniform(-1, 1)) if dc else 0.0
    return RealCoefficients(period, a0, rng.uniform(-1, 1, n), rng.uniform(-1, 1, n))


def _grid(period: float, points: int) -> np.ndarray:
    return np.arange(points) * (period / points)


def _samples(coeffs: RealCoefficients, order: float, m: int) -> SampledSignal:
    return SampledSignal(synthesize_ffs(coeffs, order, _grid(coeffs.period, m)), coeffs.period)


def _coeff_error(x: RealCoefficients, y: RealCoefficients) -> float:
    return max(abs(x.a0 - y.a0), float(np.max(np.abs(x.a - y.a), initial=0.0)),
               float(np.max(np.abs(x.b - y.b), initial=0.0)))


def _alpha0_degeneration(rng):
    err = 0.0
    for _ in range(50):
        c = random_coeffs(rng, 16)
        t = _grid(c.period, 256)
        classical = c.a0 + sum(an * np.cos(n * t) for n, an in enumerate(c.a, 1)) + sum(
            bn * np.sin(n * t) for n, bn in enumerate(c.b, 1)
        )
        err = max(err, float(np.max(np.abs(synthesize_ffs(c, 0.0, t) - classical))))
    return err


def _half_order_pattern(rng):
    err = 0.0
    h = math.sqrt(2) / 2
    for _ in range(20):
        c = random_coeffs(rng, 16)
        r = to_fractional(c, 0.5)
        err = max(err, float(np.max(np.abs(r.a - h * (c.a + c.b)))), float(np.max(np.abs(r.b - h * (c.b - c.a)))))
    return err


def _three_forms(rng):
    err = 0.0
    for alpha in np.round(np.arange(0, 2.01, 0.1), 10):
        c = random_coeffs(rng, 16)
        t = rng.uniform(0, c.period, 256)
        f = synthesize_ffs(c, alpha, t)
        err = max(
            err,
            float(np.max(np.abs(f - synthesize_expanded_form(c, alpha, t)))),
            float(np.max(np.abs(f - synthesize_linear_form(to_fractional(c, alpha), t)))),
        )
    return err


def _classical_analysis_is_rotation(rng):
    err = 0.0
    for alpha in (0.0, 0.25, 0.5, 1.0, 1.5):
        c = random_coeffs(rng, 8)
        got = analyze_classical(_samples(c, alpha, 1024), c.n_harmonics)
        err = max(err, _coeff_error(got, to_fractional(c, alpha)))
    return err


def _fractional_analysis_round_trip(rng):
    err = 0.0
    for alpha in (0.0, 0.25, 0.5, 1.5, 1.9):
        c = random_coeffs(rng, 8)
        got = analyze_fractional(_samples(c, alpha, 1024), alpha, c.n_harmonics)
        err = max(err, _coeff_error(got, c))
    return err


def _complex_equivalence(part):
    def check(rng):
        err = 0.0
        for alpha in (0.0, 0.5, 1.0, 1.5, 2.0):
            c = random_coeffs(rng, 8)
            t = _grid(c.period, 128)
            z = synthesize_complex(complex_coefficients(c, alpha), t)
            if part == "real":
                err = max(err, float(np.max(np.abs(z.real - synthesize_ffs(c, alpha, t)))))
            else:
                err = max(err, float(np.max(np.abs(z.imag))))
        return err

    return check


def _conjugate_defect(rng):
    err = 0.0
    t = np.linspace(0, 2 * math.pi, 257)
    for alpha in np.round(np.arange(0, 4.01, 0.1), 10):
        for n in (1, 2, 5):
            direct = np.max(np.abs(complex_basis(-n, 1.0, alpha, t) - np.conj(complex_basis(n, 1.0, alpha, t))))
            err = max(err, abs(direct - conjugate_symmetry_defect(n, alpha)))
    return err


def _alpha_grid():
    return np.round(np.arange(0, 4.0 + 1e-9, 0.1), 10)


def _group_law(rng):
    err = 0.0
    for a1 in _alpha_grid():
        for a2 in _alpha_grid():
            err = max(err, float(np.max(np.abs(compose_check(a1, a2).m - rotation_matrix(a1 + a2).m))))
    return err


def _orthogonality(rng):
    err = 0.0
    for alpha in _alpha_grid():
        m = rotation_matrix(alpha).m
        err = max(err, float(np.max(np.abs(m.T @ m - np.eye(2)))), abs(float(np.linalg.det(m)) - 1.0))
    return err


def _parseval(rng):
    err = 0.0
    for alpha in _alpha_grid():
        c = random_coeffs(rng, 16)
        r = to_fractional(c, alpha)
        err = max(err, float(np.max(np.abs(r.a**2 + r.b**2 - c.a**2 - c.b**2))))
    return err


def _round_trip(rng):
    err = 0.0
    for alpha in _alpha_grid():
        c = random_coeffs(rng, 16)
        if rotation_matrix(alpha).m[0, 0] == 0.0:
            c = c.replace(a0=0.0)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                back = from_fractional(to_fractional(c, alpha), alpha)
        else:
            back = from_fractional(to_fractional(c, alpha), alpha)
        err = max(err, _coeff_error(back, c))
    return err


def _orthonormality(rng):
    period = 2 * math.pi
    w = 1.0
    err = 0.0
    for alpha in (0.0, 0.3, 0.5, 1.0, 1.7):
        sig = {}
        for n in range(1, 9):
            sig["c", n] = SampledSignal.from_function(lambda t, n=n: frac_basis_cos(n, w, alpha, t), period, 512)
            sig["s", n] = SampledSignal.from_function(lambda t, n=n: frac_basis_sin(n, w, alpha, t), period, 512)
        for n in range(1, 9):
            for m in range(1, 9):
                delta = 1.0 if n == m else 0.0
                cc = 2 / period * periodic_integral(sig["c", n], lambda t: frac_basis_cos(m, w, alpha, t))
                ss = 2 / period * periodic_integral(sig["s", n], lambda t: frac_basis_sin(m, w, alpha, t))
                cs = 2 / period * periodic_integral(sig["c", n], lambda t: frac_basis_sin(m, w, alpha, t))
                err = max(err, abs(cc - delta), abs(ss - delta), abs(cs))
    return err


def _half_turn(rng):
    err = 0.0
    for alpha in (0.0, 0.3, 0.5, 1.0, 1.7):
        c = random_coeffs(rng, 16)
        t = rng.uniform(0, c.period, 256)
        err = max(err, float(np.max(np.abs(synthesize_ffs(c, alpha + 2, t) + synthesize_ffs(c, alpha, t)))))
    return err


def _weyl_match(rng):
    err = 0.0
    for alpha in (0.25, 0.5, 1.0, 1.5):
        c = random_coeffs(rng, 8, dc=False)
        t = _grid(c.period, 512)
        sig = SampledSignal(synthesize_linear_form(c, t), c.period)
        err = max(err, float(np.max(np.abs(frac_derivative_signal(c, alpha, True, t) - weyl_oracle(sig, alpha)))))
    return err


def _semigroup(rng):
    err = 0.0
    for a1 in (0.25, 0.5, 1.0):
        for a2 in (0.25, 0.5, 1.0):
            c = random_coeffs(rng, 8, dc=False)
            t = _grid(c.period, 256)
            twice = frac_derivative_coeffs(frac_derivative_coeffs(c, a1, True), a2, True)
            once = frac_derivative_coeffs(c, a1 + a2, True)
            err = max(err, float(np.max(np.abs(synthesize_linear_form(twice, t) - synthesize_linear_form(once, t)))))
    return err


def _normalized_identity(rng):
    err = 0.0
    for alpha in (0.0, 0.25, 0.5, 1.0, 1.5, 2.0):
        c = random_coeffs(rng, 16)
        t = rng.uniform(0, c.period, 256)
        err = max(err, float(np.max(np.abs(frac_derivative_signal(c, alpha, False, t) - synthesize_ffs(c, alpha, t)))))
    return err


@dataclass(frozen=True)
class Property:
    name: str
    check: Callable[[np.random.Generator], float]
    slack: float = 1.0


@dataclass(frozen=True)
class PropertyResult:
    name: str
    error: float
    limit: float

    @property
    def passed(self) -> bool:
        return bool(self.error <= self.limit)


PROPERTIES: tuple[Property, ...] = (
    Property("alpha=0 reduces to the classical series", _alpha0_degeneration),
    Property("alpha=1/2 coefficient pattern", _half_order_pattern),
    Property("three real synthesis forms agree", _three_forms),
    Property("classical analysis of f(t;alpha) = rotated coefficients", _classical_analysis_is_rotation),
    Property("fractional analysis recovers coefficients", _fractional_analysis_round_trip),
    Property("complex series real part = real series", _complex_equivalence("real")),
    Property("complex series imaginary residue", _complex_equivalence("imag")),
    Property("conjugate-symmetry defect = 2|sin(pi alpha/2)|", _conjugate_defect),
    Property("rotation group law", _group_law),
    Property("rotation orthogonal with det 1", _orthogonality),
    Property("per-harmonic Parseval", _parseval),
    Property("rotation round trip", _round_trip),
    Property("fractional basis orthonormality", _orthonormality),
    Property("half-turn sign flip", _half_turn),
    Property("scaled derivative = Weyl oracle", _weyl_match, slack=10.0),
    Property("scaled derivative semigroup", _semigroup, slack=10.0),
    Property("normalized derivative = FFS synthesis", _normalized_identity),
)


def run(tolerance: float = DEFAULT_TOLERANCE, seed: int = DEFAULT_SEED) -> list[PropertyResult]:
    """Run every property with its own generator derived from ``seed``."""
    results = []
    for i, prop in enumerate(PROPERTIES):
        rng = np.random.default_rng([seed, i])
        results.append(PropertyResult(prop.name, prop.check(rng), tolerance * prop.slack))
    return results


def format_report(results: list[PropertyResult], tolerance: float, seed: int) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"fractional Fourier series self-check (tolerance={tolerance:.3g}, seed={seed})", ""]
    lines.append(f"{'property':<{width}}  {'max error':>10}  {'limit':>9}  result")
    for r in results:
        lines.append(f"{r.name:<{width}}  {r.error:10.3e}  {r.limit:9.2e}  {'PASS' if r.passed else 'FAIL'}")
    failed = sum(not r.passed for r in results)
    lines.append("")
    lines.append(f"{len(results) - failed}/{len(results)} properties passed")
    return "\n".join(lines) + "\n"
