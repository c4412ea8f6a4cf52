"""
Bessel integrals from Gaussian ones
===================================

Writing J_0(x) as exp(-c (x/2)^2) acting on a vacuum, with c^nu giving
1/Gamma(nu + 1), turns integrals of J_0 into Gaussian integrals with c
treated as a constant. Here the predictions are compared with
oscillatory quadrature.
"""

import math

from scipy import special as sps

from umbral import generating as gen
from umbral.numeric import integrate_halfline_oscillatory

# integrating over (0, inf) lobe by lobe between the zeros of J_0
zeros = sps.jn_zeros(0, 64)
res = integrate_halfline_oscillatory(lambda x: float(sps.j0(x)), tol=1e-8, zeros=lambda k: float(zeros[k]))
print("quadrature of J_0 over the half-line:", res.value)
print("umbral prediction sqrt(pi)/Gamma(1/2):", gen.bessel_j0_halfline_integral())

###############################################################################
# Mellin moments: the Gaussian moment 2^(nu-1) Gamma(nu/2) carries c^(-nu/2),
# which on the vacuum becomes 1/Gamma(1 - nu/2).

for nu in (0.5, 1.0, 1.25):
    quad = integrate_halfline_oscillatory(lambda x: float(sps.j0(x)) * x ** (nu - 1), tol=1e-8,
                                          zeros=lambda k: float(zeros[k])).value
    print(f"nu={nu:4}: quadrature {quad:.8f}, closed form {gen.bessel_j0_mellin(nu):.8f}")

###############################################################################
# A Gaussian weight makes the integral absolutely convergent. The umbral
# form is a binomial series in c that sums to a modified Bessel function.

for b in (0.5, 1.0, 2.0):
    q = b * b / 8
    print(f"b={b}: series {gen.gauss_bessel_integral(b):.12f}, "
          f"I_0 form {math.sqrt(math.pi) / 2 * math.exp(-q) * sps.i0(q):.12f}")
