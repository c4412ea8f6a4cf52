"""
Hermite identities through the Hermite umbra
============================================

Two-variable Hermite polynomials H_n(x, y) are (x + h)^n on a vacuum
whose powers are y^s (2s)!/s! for even order and zero otherwise. This
script checks a few consequences numerically, then runs the matching
catalog entries.
"""

import math

from umbral import catalog
from umbral import generating as gen
from umbral import special as sf
from umbral.operators import gauss_weierstrass

x, y, t = 0.5, 0.3, 0.4

###############################################################################
# Doetsch rule: the even-index generating function in closed form.

partial = math.fsum(t ** n / math.factorial(n) * sf.hermite2(2 * n, x, y) for n in range(60))
print("sum of t^n/n! H_2n :", partial)
print("closed form        :", gen.doetsch(x, y, t))

###############################################################################
# The same polynomials come out of Gaussian smoothing of x^n.

for n in range(5):
    smoothed = gauss_weierstrass(lambda s: s ** n, x, y)
    print(f"n={n}: smoothed x^n {smoothed: .10f}   H_n(x, y) {sf.hermite2(n, x, y): .10f}")

###############################################################################
# Heat-polynomial reductions: nu = 1/2 gives Laguerre, nu = 0 gives even Hermite.

for n in range(4):
    print(n, sf.heat_poly(n, 0.5, x, y), sf.laguerre2(n, -x * x, 4 * y))

###############################################################################
# The catalog bundles these with independent evaluations on the other side.

reports = catalog.run_all("doetsch*,assoc_*,nielsen,heat_reduction_*")
print(catalog.reports_to_text(reports).splitlines()[-1])
