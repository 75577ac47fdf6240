"""
Complex form and the broken conjugate symmetry
==============================================

Every exponential carries the same exp(i pi alpha/2) phase, so phi_{-n} is no
longer the conjugate of phi_n. The negative-index coefficients pick up
exp(-i pi alpha) to compensate and the sum of a real coefficient set stays real.
"""

# %%
import math

import numpy as np

from fracfourier import (
    RealCoefficients,
    complex_basis,
    complex_coefficients,
    conjugate_symmetry_defect,
    synthesize_complex,
    synthesize_ffs,
)

# %%
for alpha in (0.0, 0.5, 1.0, 1.5, 2.0):
    print(f"alpha={alpha}: |phi_-n - conj(phi_n)| = {conjugate_symmetry_defect(1, alpha):.4f}")

# %%
c = RealCoefficients(2 * math.pi, 0.5, [1.0, 0.2], [-0.4, 0.8])
cc = complex_coefficients(c, 0.6)
for n in cc.indices:
    print(n, np.round(cc[n], 6))

# %%
t = np.linspace(0, 2 * math.pi, 128, endpoint=False)
z = synthesize_complex(cc, t)
print("max |Im|:", np.max(np.abs(z.imag)))
print("max |Re - real series|:", np.max(np.abs(z.real - synthesize_ffs(c, 0.6, t))))
print("phi_{-1}(0) at alpha=1:", complex_basis(-1, 1.0, 1.0, 0.0))
