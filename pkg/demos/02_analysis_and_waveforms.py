"""
Recovering coefficients from samples
====================================

Classical and fractional coefficients are projections computed with the
periodic trapezoidal rule. Band-limited signals come back to round-off;
waveforms with jumps converge like 1/M^2 with midpoint samples at the jumps.
"""

# %%
import numpy as np

from fracfourier import (
    SignalKind,
    SignalSpec,
    analytic_coefficients,
    analyze_classical,
    analyze_fractional,
    sample,
    synthesize_ffs,
    SampledSignal,
    RealCoefficients,
)

# %%
for kind in (SignalKind.Square, SignalKind.Sawtooth, SignalKind.Triangle):
    spec = SignalSpec(kind, period=1.0, amplitude=2.0)
    for m in (256, 1024, 4096):
        got = analyze_classical(sample(spec, m), 9)
        want = analytic_coefficients(spec, 9)
        err = max(np.max(np.abs(got.a - want.a)), np.max(np.abs(got.b - want.b)))
        print(f"{kind.value:9s} M={m:5d}  max coefficient error {err:.2e}")

# %%
# Samples of f(t; alpha) projected on the order-alpha basis return the
# coefficients that generated them.
c = RealCoefficients(1.0, 0.3, [1.0, -2.0, 0.5], [0.0, 0.7, 0.1])
t = np.arange(64) / 64
signal = SampledSignal(synthesize_ffs(c, 0.4, t), 1.0)
print(analyze_fractional(signal, 0.4, 3))

# %%
# The same samples analysed classically give the rotated coefficients.
print(analyze_classical(signal, 3))
