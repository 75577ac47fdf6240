"""
Fractional derivatives as coefficient transforms
================================================

The normalized derivative only rotates each harmonic pair. The scaled
variant also multiplies harmonic n by (n w)^alpha and agrees with the Weyl
derivative computed from samples by FFT.
"""

# %%
import math

import numpy as np

from fracfourier import (
    RealCoefficients,
    SampledSignal,
    frac_derivative_coeffs,
    frac_derivative_signal,
    synthesize_linear_form,
    weyl_oracle,
)

# %%
cos_t = RealCoefficients(2 * math.pi, 0.0, [1.0], [0.0])
t = np.linspace(0, 2 * math.pi, 256, endpoint=False)
half = frac_derivative_signal(cos_t, 0.5, True, t)
print("D^1/2 cos t vs cos(t + pi/4):", np.max(np.abs(half - np.cos(t + math.pi / 4))))

# %%
rng = np.random.default_rng(0)
c = RealCoefficients(2 * math.pi, 0.0, rng.uniform(-1, 1, 6), rng.uniform(-1, 1, 6))
signal = SampledSignal(synthesize_linear_form(c, t), 2 * math.pi)
for alpha in (0.25, 0.5, 1.0, 1.7):
    err = np.max(np.abs(frac_derivative_signal(c, alpha, True, t) - weyl_oracle(signal, alpha)))
    print(f"alpha={alpha}: scaled derivative vs Weyl oracle {err:.2e}")

# %%
# Normalized vs scaled coefficients of D^0.5 for the same input.
print(frac_derivative_coeffs(c, 0.5).a[:3])
print(frac_derivative_coeffs(c, 0.5, scaled=True).a[:3])
