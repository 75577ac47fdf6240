"""Fourier series in fractional dimensional space.

The fractional basis of order ``alpha`` is the trigonometric basis with every
phase advanced by ``pi*alpha/2``. A series on that basis is equivalent to a
classical series whose harmonic pairs are rotated by the same angle, which is
what most of this package computes with.
"""

from .analysis import analyze_classical, analyze_fractional, periodic_integral
from .basis import (
    complex_basis,
    conjugate_symmetry_defect,
    frac_basis_cos,
    frac_basis_dc,
    frac_basis_sin,
)
from .complexform import complex_coefficients, synthesize_complex
from .errors import (
    BasisTagMismatch,
    DCUndeterminedWarning,
    DegenerateGrid,
    FFSError,
    InvalidOrder,
    InvalidPeriod,
    LengthMismatch,
    MalformedInput,
    NonFinite,
    NonOrthogonal,
    NonPositiveHarmonic,
    NyquistViolation,
    SingularDC,
    UnsupportedKind,
)
from .fracderiv import frac_derivative_coeffs, frac_derivative_signal, weyl_oracle
from .rotation import compose_check, from_fractional, rotation_matrix, to_fractional
from .signals import SignalKind, SignalSpec, analytic_coefficients, sample
from .synthesis import (
    synthesize_classical,
    synthesize_expanded_form,
    synthesize_ffs,
    synthesize_linear_form,
)
from .types import (
    LINEAR,
    BasisTag,
    ComplexCoefficients,
    FractionalOrder,
    RealCoefficients,
    RotationMatrix2,
    SampledSignal,
    validate,
)

__version__ = "0.1.0"
