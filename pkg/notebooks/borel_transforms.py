"""
Borel transforms as coefficient maps
====================================

A Borel-type transform rescales the r-th Taylor coefficient by a Gamma
factor. Applied to the Tricomi function C_0 it turns an entire function
into exp(-x), then into 1/(1+x), and on the third pass into a series
with zero radius of convergence.
"""

import math

import numpy as np

from umbral.operators import apply_transform, borel
from umbral.series import bessel_j0_series, series_eval, tricomi_c0_series

# C_0(x) = sum (-x)^r / (r!)^2, truncated at order 40
c0 = tricomi_c0_series(40)
print("C_0 coefficients:", np.round(c0.coeffs[:6], 6))

###############################################################################
# One pass multiplies by r!, leaving (-1)^r / r!: the series of exp(-x).

B = borel()
once, flag = apply_transform(c0, B)
print("B[C_0](0.5) =", series_eval(once, 0.5), " exp(-0.5) =", math.exp(-0.5), " tail:", flag.status)

###############################################################################
# Each further pass adds another r!. Watch the tail classification change.

for k in (2, 3):
    out, flag = apply_transform(c0, B.power(k))
    print(f"B^{k}[C_0]: first coefficients {out.coeffs[:5]}, tail {flag.status} (ratio {flag.witness:.3g})")

###############################################################################
# The half-order transform multiplies by Gamma(r/2 + 1). On J_0 it gives
# back the Gaussian exp(-x^2/4), the picture J_0 started from.

half, _ = apply_transform(bessel_j0_series(40), borel(0.5))
xs = np.linspace(0, 3, 7)
print("x       B_1/2[J_0](x)   exp(-x^2/4)")
for x in xs:
    print(f"{x:4.1f}  {series_eval(half, x): .12f}  {math.exp(-x * x / 4): .12f}")

###############################################################################
# Dividing instead of multiplying undoes the map exactly on coefficients.

back, _ = apply_transform(once, B.inverted())
print("max round-trip error:", float(np.max(np.abs(back.coeffs - c0.coeffs))))
