"""Closed forms produced by the umbral treatment: generating functions of
the polynomial families and definite integrals of Bessel-type functions.

Each function here is the "answer" side of an identity. The other side
(partial sums, quadrature) lives in :mod:`umbral.catalog`.
"""

from __future__ import annotations

import math

from .series import gamma, reciprocal_gamma
from .special import (
    hermite2,
    hermite3,
    hyp1f2,
    mittag_leffler,
    sheffer_e,
    tricomi_c,
)


class DomainError(ValueError):
    """The requested point lies outside the region where a closed form holds."""


# --- Bessel integrals: umbral Gaussian moments ----------------------------------

def vacuum_c(nu: float) -> float:
    """Action of c^nu on the vacuum: 1/Gamma(nu + 1)."""
    return reciprocal_gamma(nu + 1)


def bessel_j0_halfline_integral() -> float:
    # Gaussian integral with c treated as a constant: sqrt(pi) c^(-1/2).
    return math.sqrt(math.pi) * vacuum_c(-0.5)


def bessel_j0_mellin(nu: float) -> float:
    """Integral of J_0(x) x^(nu-1) over (0, inf), valid for 0 < nu < 3/2."""
    if not 0 < nu < 1.5:
        raise DomainError("the Mellin integral of J_0 needs 0 < nu < 3/2")
    # Gaussian moment 2^(nu-1) Gamma(nu/2) c^(-nu/2).
    return 2 ** (nu - 1) * gamma(nu / 2) * vacuum_c(-nu / 2)


def bessel_j0_square_arg_integral() -> float:
    """Integral of J_0(x^2) over (0, inf)."""
    return 4 ** -0.75 * gamma(0.25) / gamma(0.75)


def gauss_bessel_integral(b: float) -> float:
    """Integral of exp(-x^2) J_0(b x) over (0, inf) as the binomial series in c."""
    q = (b / 2) ** 2

    def terms():
        r = 0
        power = 1.0
        while True:
            yield reciprocal_gamma(0.5 - r) / math.factorial(r) ** 2 * power
            r += 1
            power *= q

    from .special import sum_series
    return math.pi / 2 * sum_series(terms())


def hankel_gauss_over_r(s: float) -> float:
    """Order-0 Hankel transform of exp(-r^2)/r at s."""
    return gauss_bessel_integral(s)


def tricomi_sin_integral(s: int, x: float) -> float:
    """Integral of J_s(2 sqrt(x u)) u^(-s/2) sin(u) over (0, inf)."""
    return x ** (s / 2) * hyp1f2(1.0, 0.5 + s / 2, 1 + s / 2, -x * x / 4) / math.factorial(s)


def tricomi_cos_integral(s: int, x: float) -> float:
    """Integral of J_s(2 sqrt(x u)) u^(-s/2) cos(u) over (0, inf)."""
    return x ** (s / 2 + 1) * hyp1f2(1.0, 1 + s / 2, 1.5 + s / 2, -x * x / 4) / math.factorial(s + 1)


def borel_scaled_integral(k: float, alpha: float) -> float:
    """Whole-line integral of the alpha-order Borel transform of f, given that of f."""
    if abs(alpha) >= 1:
        raise DomainError("need |alpha| < 1")
    return k * gamma(1 - alpha)


def bessel_j0_line_integral_from_borel() -> float:
    """Recover the integral of J_0 over the line from its half-order Borel image.

    The image is exp(-(x/2)^2), whose integral is 2 sqrt(pi); dividing by
    Gamma(1/2) undoes the scaling picked up by the transform.
    """
    return 2 * math.sqrt(math.pi) / gamma(0.5)


def mittag_leffler_gaussian_integral(beta: float) -> float:
    """Whole-line integral of E_(1, beta+1)(-x^2)."""
    if beta <= 0:
        raise DomainError("need beta > 0")
    return math.pi * reciprocal_gamma(beta + 0.5)


# --- Laguerre and truncated-Bessel generating functions ---------------------------

def laguerre_gf(x: float, y: float, xi: float) -> float:
    """sum_n xi^n L_n(x, y) = exp(-x xi/(1 - y xi)) / (1 - y xi)."""
    d = 1 - y * xi
    if abs(y * xi) >= 1:
        raise DomainError("need |y xi| < 1")
    return math.exp(-x * xi / d) / d


def laguerre_lacunary_gf(x: float, y: float, xi: float) -> float:
    """sum_n xi^n L_{2n}(x, y), for xi >= 0 and sqrt(xi)|y| < 1."""
    if xi < 0:
        raise DomainError("need xi >= 0")
    r = math.sqrt(xi)
    if r * abs(y) >= 1:
        raise DomainError("need sqrt(xi)|y| < 1")
    a, b = 1 - r * y, 1 + r * y
    return 0.5 * (math.exp(-r * x / a) / a + math.exp(r * x / b) / b)


def laguerre_exp_gf(x: float, y: float, xi: float) -> float:
    """sum_n xi^n/n! L_n(x, y) = exp(y xi) C_0(x xi)."""
    return math.exp(y * xi) * tricomi_c(0, x * xi)


def bessel_trunc_gf(x: float, y: float, xi: float) -> float:
    """sum_n xi^n/n! b_n(x, y) = C_0(x xi) / (1 - y xi)."""
    if abs(y * xi) >= 1:
        raise DomainError("need |y xi| < 1")
    return tricomi_c(0, x * xi) / (1 - y * xi)


# --- Hermite generating functions ------------------------------------------------

def hermite_gf(x: float, y: float, t: float) -> float:
    return math.exp(x * t + y * t * t)


def hermite3_gf(x: float, y: float, z: float, t: float) -> float:
    return math.exp(x * t + y * t * t + z * t ** 3)


def _doetsch_guard(y: float, t: float) -> float:
    d = 1 - 4 * y * t
    if abs(4 * y * t) >= 1:
        raise DomainError("need |t| < 1/(4|y|)")
    return d


def doetsch(x: float, y: float, t: float) -> float:
    """sum_n t^n/n! H_{2n}(x, y) = exp(x^2 t/(1-4yt)) / sqrt(1-4yt)."""
    d = _doetsch_guard(y, t)
    return math.exp(x * x * t / d) / math.sqrt(d)


def doetsch_general(l: int, x: float, y: float, t: float) -> float:
    """sum_n t^n/n! H_{2n+l}(x, y) in closed form."""
    d = _doetsch_guard(y, t)
    return math.exp(x * x * t / d) / math.sqrt(d) * hermite2(l, x / d, y / d)


def doetsch_general_scaled(l: int, x: float, y: float, t: float) -> float:
    """Same sum written with H_l(x/sqrt(1-4yt), y) (1-4yt)^(-l/2)."""
    d = _doetsch_guard(y, t)
    return math.exp(x * x * t / d) / math.sqrt(d) * hermite2(l, x / math.sqrt(d), y) / d ** (l / 2)


def hermite_exponential_shift(x: float, y: float, t: float) -> float:
    """Vacuum value of exp(h^2 t + 2 h x t) for the Hermite umbra of parameter y."""
    d = _doetsch_guard(y, t)
    return math.exp(4 * (t * x) ** 2 * y / d) / math.sqrt(d)


def umbral_h_exp(y: float, z: float) -> float:
    """exp(h z) on the Hermite vacuum: exp(y z^2)."""
    return math.exp(y * z * z)


def umbral_h_square_exp(y: float, z: float) -> float:
    """exp(h^2 z) on the Hermite vacuum: (1 - 4yz)^(-1/2)."""
    if abs(4 * y * z) >= 1:
        raise DomainError("need |z| < 1/(4|y|)")
    return 1 / math.sqrt(1 - 4 * y * z)


def bilateral_hermite_gf(x: float, y: float, z: float, w: float, t: float) -> float:
    """sum_n t^n/n! H_n(x, y) H_n(z, w)."""
    q = 4 * w * t * t * y
    if abs(q) >= 1:
        raise DomainError("need |4 w t^2 y| < 1")
    return (math.exp(x * t * (z + w * x * t)) / math.sqrt(1 - q)
            * math.exp((z + 2 * w * t * x) ** 2 * t * t * y / (1 - q)))


def generalized_assoc_hermite_gf(x: float, y: float, t: float, beta: float, alpha: float) -> float:
    """sum_n t^n/n! H_n(x, y | beta; alpha)."""
    if y < 0:
        raise DomainError("need y >= 0")
    return math.exp(x * t) * y ** (beta / 2) * sheffer_e(alpha, beta, y ** (alpha / 2) * t)


def triple_lacunary_series(x: float, y: float, t: float, terms: int = 30) -> float:
    """exp(x^3 t) sum_s y^s/s! H^(3)_{2s}(3x^2 t, 3x t, t), truncated."""
    total = 0.0
    for s in range(terms):
        total += y ** s / math.factorial(s) * hermite3(2 * s, 3 * x * x * t, 3 * x * t, t)
    return math.exp(x ** 3 * t) * total


def doetsch_reexpansion(x: float, y: float, t: float, terms: int = 60) -> float:
    """exp(x^2 t) sum_s y^s/s! H_{2s}(2xt, t), truncated."""
    total = 0.0
    for s in range(terms):
        total += y ** s / math.factorial(s) * hermite2(2 * s, 2 * x * t, t)
    return math.exp(x * x * t) * total


# --- generalized heat polynomials --------------------------------------------------

def heat_gf_exp(nu: float, x: float, y: float, t: float) -> float:
    """sum_n t^n/n! P_{n,nu}(x, y) = Gamma(nu+1/2) exp(4yt) C_{nu-1/2}(-t x^2)."""
    return gamma(nu + 0.5) * math.exp(4 * y * t) * tricomi_c(nu - 0.5, -t * x * x)


def heat_gf_geom(nu: float, x: float, y: float, t: float) -> float:
    """sum_n t^n P_{n,nu}(x, y) through the Mittag-Leffler function."""
    if abs(4 * y * t) >= 1:
        raise DomainError("need |4yt| < 1")
    d = 1 - 4 * y * t
    return gamma(nu + 0.5) / d * mittag_leffler(1.0, nu + 0.5, x * x * t / d)
