"""
The fractional basis and its coefficient rotation
=================================================

A series on the order-alpha basis ``cos(n w t + pi alpha/2)``,
``sin(n w t + pi alpha/2)`` is the same function as a classical series
whose (a_n, b_n) pairs have been rotated clockwise by pi alpha/2.
"""

# %%
import math

import numpy as np

from fracfourier import (
    RealCoefficients,
    rotation_matrix,
    synthesize_ffs,
    synthesize_linear_form,
    to_fractional,
)

coeffs = RealCoefficients(period=2 * math.pi, a0=1.0, a=[1.0, 0.5], b=[1.0, -0.25])

# %%
# At alpha = 1/2 the rotation mixes a_n and b_n with weight sqrt(2)/2.
print(rotation_matrix(0.5).m)
rotated = to_fractional(coeffs, 0.5)
print("A_n =", rotated.a, " B_n =", rotated.b, " A0/2 =", rotated.a0)

# %%
# Both routes give the same curve.
t = np.linspace(0, 2 * math.pi, 9)
print(np.max(np.abs(synthesize_ffs(coeffs, 0.5, t) - synthesize_linear_form(rotated, t))))

# %%
# Sweeping alpha: the harmonic energy a_n^2 + b_n^2 never changes, the
# constant term follows cos(pi alpha / 2).
for alpha in (0.0, 0.5, 1.0, 1.5, 2.0):
    r = to_fractional(coeffs, alpha)
    print(f"alpha={alpha:3.1f}  A0/2={r.a0:+.4f}  energy={np.sum(r.a**2 + r.b**2):.4f}")
