"""Umbral weights, Borel-family coefficient transforms and the
negative-derivative integration series.

An umbral operator is represented by what it does to the vacuum: the
r-th power lands on a number w_r. Applying it to a series multiplies
c_r by w_r. Borel-type transforms are the same kind of object, a
per-order factor, plus a flag saying whether to multiply or divide.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .numeric import integrate_finite
from .series import (
    ConvergenceFlag,
    TruncatedPowerSeries,
    beta,
    classify_tail,
    gamma,
    is_gamma_pole,
    log_abs_gamma,
    reciprocal_gamma,
)
from .special import hermite2, hermite_vacuum


class ZeroFactorError(ArithmeticError):
    """An inverse transform hit an order whose factor vanishes."""


@dataclass(frozen=True)
class UmbralWeight:
    """Vacuum action r -> w_r of an umbral operator.

    Values are cached per order on first use; the cache is a plain dict
    so concurrent readers at worst recompute an entry.
    """

    name: str
    weight: Callable[[int], float]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, r: int) -> float:
        try:
            return self._cache[r]
        except KeyError:
            w = float(self.weight(r))
            if not math.isfinite(w):
                raise ValueError(f"weight {self.name} is not finite at order {r}")
            self._cache[r] = w
            return w

    def values(self, order: int) -> np.ndarray:
        return np.array([self(r) for r in range(order + 1)])


def unit_weight() -> UmbralWeight:
    return UmbralWeight("unit", lambda r: 1.0)


def c_hat(alpha: float = 1.0) -> UmbralWeight:
    """Bessel umbra: c^(alpha r) on the vacuum is 1/Gamma(alpha r + 1)."""
    return UmbralWeight(f"c_hat[{alpha:g}]", lambda r: reciprocal_gamma(alpha * r + 1))


def h_hat(y: float) -> UmbralWeight:
    """Second-order Hermite umbra with parameter y."""
    return UmbralWeight(f"h_hat[{y:g}]", lambda r: hermite_vacuum(r, y))


def h_hat_m(y: float, m: int) -> UmbralWeight:
    """m-th order Hermite umbra: y^(r/m) r!/Gamma(r/m + 1) when m divides r, else 0."""
    def w(r: int) -> float:
        if r % m:
            return 0.0
        s = r // m
        return float(math.factorial(r) // math.factorial(s)) * y ** s
    return UmbralWeight(f"h_hat_m[{y:g},{m}]", w)


def d_hat(nu: float) -> UmbralWeight:
    """Heat-polynomial umbra: Gamma(nu + 1/2) / Gamma(nu + 1/2 + r)."""
    if is_gamma_pole(nu + 0.5):
        raise ValueError("nu + 1/2 must avoid the poles of Gamma")
    g = gamma(nu + 0.5)
    return UmbralWeight(f"d_hat[{nu:g}]", lambda r: g * reciprocal_gamma(nu + 0.5 + r))


def p_hat(m: int) -> UmbralWeight:
    """Monomial selector: r! when r == m, otherwise 0."""
    return UmbralWeight(f"p_hat[{m}]", lambda r: float(math.factorial(r)) if r == m else 0.0)


def H_hat(x: float, y: float) -> UmbralWeight:
    """Hermite-polynomial umbra: the r-th power gives H_r(x, y)."""
    return UmbralWeight(f"H_hat[{x:g},{y:g}]", lambda r: hermite2(r, x, y))


def umbral_apply(f: TruncatedPowerSeries, w: UmbralWeight) -> TruncatedPowerSeries:
    """Replace each coefficient c_r with c_r * w_r."""
    return TruncatedPowerSeries(f.coeffs * w.values(f.order))


def umbral_vacuum_sum(f: TruncatedPowerSeries, w: UmbralWeight, z: float = 1.0) -> float:
    """Evaluate sum_r c_r z^r w_r, i.e. f(z * umbra) acting on the vacuum."""
    return float(np.dot(f.coeffs * w.values(f.order), z ** np.arange(f.order + 1)))


# --- Borel family ----------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientTransform:
    """Per-order multiplicative factor; ``inverse`` divides instead.

    ``log_factor`` optionally returns (log|factor|, sign) so that huge
    factors can be applied without overflowing.
    """

    name: str
    factor: Callable[[int], float]
    inverse: bool = False
    log_factor: Optional[Callable[[int], tuple[float, float]]] = field(default=None, compare=False)

    def inverted(self) -> "CoefficientTransform":
        return CoefficientTransform(self.name, self.factor, not self.inverse, self.log_factor)

    def power(self, k: int) -> "CoefficientTransform":
        """The transform applied k times in a row."""
        if k < 1:
            raise ValueError("power needs k >= 1")
        lf = self.log_factor
        return CoefficientTransform(
            f"{self.name}^{k}",
            lambda r: self.factor(r) ** k,
            self.inverse,
            None if lf is None else (lambda r: (k * lf(r)[0], lf(r)[1] ** k)),
        )


def _gamma_ratio_log(num: float, den: float) -> tuple[float, float]:
    ln, sn = log_abs_gamma(num)
    ld, sd = log_abs_gamma(den)
    return ln - ld, sn * sd


def borel(alpha: float = 1.0, gamma_: float = 1.0) -> CoefficientTransform:
    """Normalised Borel transform: factor Gamma(gamma + alpha r) / Gamma(gamma).

    With gamma = 1 this is Gamma(alpha r + 1), the alpha-order Borel transform.
    """
    g = gamma(gamma_)
    return CoefficientTransform(
        f"borel[{alpha:g},{gamma_:g}]",
        lambda r: gamma(gamma_ + alpha * r) / g,
        log_factor=lambda r: _gamma_ratio_log(gamma_ + alpha * r, gamma_),
    )


def borel_leroy(alpha: float = 1.0, gamma_: float = 1.0) -> CoefficientTransform:
    """Borel-Leroy transform with kernel exp(-t) t^(gamma-1): factor Gamma(gamma + alpha r)."""
    return CoefficientTransform(
        f"borel_leroy[{alpha:g},{gamma_:g}]",
        lambda r: gamma(gamma_ + alpha * r),
        log_factor=lambda r: log_abs_gamma(gamma_ + alpha * r),
    )


def bborel(alpha: float, gamma_: float, beta_: float, delta: float,
           normalized: bool = True) -> CoefficientTransform:
    """Beta-kernel Borel transform: factor B(gamma + alpha r, beta + delta r).

    Normalised by B(gamma, beta) unless ``normalized`` is False, in which
    case the raw kernel integral over [0, 1] is reproduced.
    """
    norm = beta(gamma_, beta_) if normalized else 1.0

    def log_factor(r: int) -> tuple[float, float]:
        la, sa = log_abs_gamma(gamma_ + alpha * r)
        lb, sb = log_abs_gamma(beta_ + delta * r)
        lab, sab = log_abs_gamma(gamma_ + beta_ + (alpha + delta) * r)
        return la + lb - lab - math.log(abs(norm)), sa * sb * sab * math.copysign(1.0, norm)

    return CoefficientTransform(
        f"bborel[{alpha:g},{gamma_:g},{beta_:g},{delta:g}]",
        lambda r: beta(gamma_ + alpha * r, beta_ + delta * r) / norm,
        log_factor=log_factor,
    )


def _apply_factor(c: float, T: CoefficientTransform, r: int) -> float:
    if c == 0.0:
        if T.inverse and T.factor(r) == 0.0:
            raise ZeroFactorError(f"{T.name} vanishes at order {r}")
        return 0.0
    try:
        fac = T.factor(r)
    except OverflowError:
        fac = math.inf
    if math.isfinite(fac) and fac != 0.0:
        out = c / fac if T.inverse else c * fac
        if math.isfinite(out) and out != 0.0:
            return out
    if fac == 0.0 and T.inverse:
        raise ZeroFactorError(f"{T.name} vanishes at order {r}")
    if T.log_factor is None:
        raise OverflowError(f"{T.name} overflows at order {r}")
    lf, sign = T.log_factor(r)
    lc = math.log(abs(c))
    mag = lc - lf if T.inverse else lc + lf
    return math.copysign(1.0, c) * sign * math.exp(mag)


def apply_transform(f: TruncatedPowerSeries,
                    T: CoefficientTransform) -> tuple[TruncatedPowerSeries, ConvergenceFlag]:
    """Apply a coefficient transform and report how the result's tail behaves."""
    out = np.array([_apply_factor(float(c), T, r) for r, c in enumerate(f.coeffs)])
    g = TruncatedPowerSeries(out, f"{T.name}{'^-1' if T.inverse else ''}[{f.label or 'f'}]")
    flag = classify_tail(g) if g.order >= 8 else ConvergenceFlag("undetermined")
    return g, flag


def borel_integral_scaling(k: float, alpha: float) -> float:
    """Line integral of the alpha-order Borel image of f, given the integral k of f."""
    if abs(alpha) >= 1:
        raise ValueError("the scaling law needs |alpha| < 1")
    return k * gamma(1 - alpha)


# --- negative-derivative integration -----------------------------------------------

def negative_derivative_integrate(derivs: Callable[[int], float], x: float, S: int) -> float:
    """Primitive F(x) = sum_{s<S} (-1)^s x^(s+1)/(s+1)! f^(s)(x).

    ``derivs(s)`` must return the s-th derivative of the integrand at x.
    F(0) = 0, so F(x) is the integral over [0, x]. Growing terms trigger
    a warning since the truncation is then meaningless.
    """
    if S < 1:
        raise ValueError("need at least one term")
    total = 0.0
    coef = x  # x^(s+1)/(s+1)!
    prev = None
    growing = 0
    for s in range(S):
        if s:
            coef *= -x / (s + 1)
        term = coef * derivs(s)
        total += term
        if prev is not None and abs(term) > abs(prev) > 0:
            growing += 1
        else:
            growing = 0
        prev = term
    if growing >= 3 and abs(prev) > 1e-8 * max(1.0, abs(total)):
        warnings.warn("negative-derivative series terms are still growing at truncation",
                      RuntimeWarning, stacklevel=2)
    return total


def negative_derivative_definite(derivs_at: Callable[[int, float], float], a: float, b: float,
                                 S: int) -> float:
    """Integral over [a, b] as F(b) - F(a); ``derivs_at(s, x)`` gives f^(s)(x)."""
    return (negative_derivative_integrate(lambda s: derivs_at(s, b), b, S)
            - negative_derivative_integrate(lambda s: derivs_at(s, a), a, S))


def hermite_integral_x(n: int, x: float, y: float) -> float:
    """Primitive in x of H_n(x, y): sum_s C(n,s) (-1)^s x^(s+1)/(s+1) H_{n-s}(x, y)."""
    return sum(math.comb(n, s) * (-1) ** s * x ** (s + 1) / (s + 1) * hermite2(n - s, x, y)
               for s in range(n + 1))


def hermite_integral_y(n: int, x: float, y: float) -> float:
    """Primitive in y of H_n(x, y)."""
    return sum((-1) ** s * y ** (s + 1) / math.factorial(s + 1)
               * math.factorial(n) / math.factorial(n - 2 * s) * hermite2(n - 2 * s, x, y)
               for s in range(n // 2 + 1))


def hermite_product_integral(n: int, m: int, x: float, y: float) -> float:
    """A primitive in x of H_n H_m, built from repeated Hermite primitives."""
    nf, mf = math.factorial(n), math.factorial(m)
    return sum((-1) ** s * nf * mf / (math.factorial(n - s) * math.factorial(m + 1 + s))
               * hermite2(n - s, x, y) * hermite2(m + 1 + s, x, y)
               for s in range(n + 1))


def hermite_product_power_integral(n: int, m: int, p: int, x: float, y: float) -> float:
    """Primitive in x of H_n H_m x^p vanishing at x = 0.

    The derivative order s runs up to n + m, the degree of H_n H_m; the
    inner sum keeps only the splits with r <= n and s - r <= m.
    """
    nf, mf, pf = math.factorial(n), math.factorial(m), math.factorial(p)
    total = 0.0
    for s in range(n + m + 1):
        inner = 0.0
        for r in range(max(0, s - m), min(s, n) + 1):
            inner += (math.comb(s, r) * nf * mf / (math.factorial(n - r) * math.factorial(m - s + r))
                      * hermite2(n - r, x, y) * hermite2(m - s + r, x, y))
        total += (-1) ** s * pf / math.factorial(p + s + 1) * x ** (p + s + 1) * inner
    return total


def hermite_cos_integral_x(n: int, x: float, y: float) -> float:
    """Integral over [0, x] of H_n(xi, y) cos(xi) d xi.

    The primitive's value at 0 is non-zero for odd n and appears as a
    truncated exponential in -y.
    """
    from .special import cos_quarter_turns, cos_shifted, truncated_exp

    nf = math.factorial(n)
    prim = -sum(cos_shifted(x, s + 1) * nf / math.factorial(n - s) * hermite2(n - s, x, y)
                for s in range(n + 1))
    m = (n - 1) // 2
    boundary = nf * abs(cos_quarter_turns(n + 1)) * (-1) ** m * truncated_exp(m, -y) if n >= 1 else 0.0
    return prim - boundary


def gaussian_exp_integral(x: float, a: float, b: float, terms: int = 80) -> float:
    """Integral over [0, x] of exp(a xi^2 + b xi), as the negative-derivative series."""
    e = math.exp(a * x * x + b * x)
    u = -2 * a * x - b
    # (-1)^s f^(s)(x) = H_s(-2ax - b, a) f(x); undo the sign the series adds.
    return negative_derivative_integrate(lambda s: (-1) ** s * hermite2(s, u, a) * e, x, terms)


def gaussian_cos_integral(x: float, a: float, b: float, terms: int = 80) -> float:
    """Integral over [0, x] of exp(a xi^2 + b xi) cos(xi) through F_n(x; a, b)."""
    from .special import gaussian_cos_coefficient

    e = math.exp(a * x * x + b * x)
    return negative_derivative_integrate(lambda s: gaussian_cos_coefficient(s, x, a, b) * e, x, terms)


# --- smoothing and derivatives ---------------------------------------------------

def gauss_weierstrass(f: Callable[[float], float], x: float, y: float,
                      tol: float = 1e-12) -> float:
    """exp(y d^2/dx^2) f at x as a Gaussian convolution.

    Integrates over x +/- 12 sqrt(2y), where the kernel falls below 1e-31.
    """
    if y <= 0:
        raise ValueError("gauss_weierstrass needs y > 0")
    half = 12 * math.sqrt(2 * y)
    norm = 1 / (2 * math.sqrt(math.pi * y))

    def integrand(xi: float) -> float:
        return math.exp(-(xi - x) ** 2 / (4 * y)) * f(xi)

    return norm * integrate_finite(integrand, x - half, x + half, tol).value


def trinomial_derivative(m: int, n: int, a: float, b: float, c: float, x: float) -> float:
    """m-th derivative of (a x^2 + b x + c)^n in closed form."""
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    q = a * x * x + b * x + c
    lin = 2 * a * x + b
    total = 0.0
    for r in range(m // 2 + 1):
        k = n - m + r
        if k < 0:
            continue
        total += (lin ** (m - 2 * r) * a ** r / (math.factorial(m - 2 * r) * math.factorial(r))
                  * math.factorial(n) / math.factorial(k) * q ** k)
    return math.factorial(m) * total


def hermite_umbral_negative_power(x: float, y: float, mu: float) -> float:
    """Negative power mu of the Hermite umbra of (x, -y) on its vacuum.

    Realised as the Laplace-type integral of exp(-x s - y s^2) s^(mu-1)
    divided by Gamma(mu).
    """
    from .special import laplace_gaussian_moment

    if mu <= 0 or y <= 0:
        raise ValueError("need mu > 0 and y > 0")
    return laplace_gaussian_moment(x, y, mu) / gamma(mu)
