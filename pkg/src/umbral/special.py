"""Closed-form evaluators for Bessel-type functions and two-variable
polynomial families.

Polynomials are evaluated as their defining finite sums, never through
recurrences. Entire functions are summed as power series until the terms
stop mattering; none of these are meant for large arguments.
"""

from __future__ import annotations

import math
from typing import Callable, Iterator

from .series import PoleError, gamma, is_gamma_pole, reciprocal_gamma

SERIES_CUTOFF = 1e-16
SERIES_MAX_TERMS = 500


class PrecisionError(ArithmeticError):
    """Raised when a series loses too many digits to cancellation."""


class ConvergenceError(ArithmeticError):
    """Raised when a series has not settled within the term budget."""


def sum_series(terms: Iterator[float], max_terms: int = SERIES_MAX_TERMS,
               rel_cutoff: float = SERIES_CUTOFF, quiet_needed: int = 3,
               precision_limit: float | None = None) -> float:
    """Add terms until ``quiet_needed`` consecutive ones are negligible."""
    total = 0.0
    quiet = 0
    largest = 0.0
    for k, t in enumerate(terms):
        if k >= max_terms:
            raise ConvergenceError(f"series not converged after {max_terms} terms")
        total += t
        largest = max(largest, abs(t))
        if precision_limit is not None and largest > precision_limit:
            raise PrecisionError(f"series terms reached {largest:.3g}; result would be noise")
        if abs(t) <= rel_cutoff * abs(total) or t == 0.0 and total == 0.0:
            quiet += 1
            if quiet >= quiet_needed:
                return total
        else:
            quiet = 0
    return total


def cos_quarter_turns(k: int) -> float:
    """cos(k*pi/2) for integer k, exactly."""
    return (1.0, 0.0, -1.0, 0.0)[k % 4]


def sin_quarter_turns(k: int) -> float:
    return (0.0, 1.0, 0.0, -1.0)[k % 4]


def cos_shifted(x: float, k: int) -> float:
    """cos(x + k*pi/2) without rounding the shift."""
    return math.cos(x) * cos_quarter_turns(k) - math.sin(x) * sin_quarter_turns(k)


def _is_integer(v: float) -> bool:
    return abs(v - round(v)) < 1e-12


def _abs_cos_half_pi(rho: float) -> float:
    if _is_integer(rho):
        return 1.0 if round(rho) % 2 == 0 else 0.0
    return abs(math.cos(rho * math.pi / 2))


# --- Bessel and Tricomi -----------------------------------------------------

def bessel_j(n: int, x: float) -> float:
    """Integer-order Bessel function J_n from its power series."""
    if n < 0:
        raise ValueError("bessel_j needs n >= 0")
    half = 0.5 * x
    q = -half * half

    def terms() -> Iterator[float]:
        t = half ** n / math.factorial(n)
        r = 0
        while True:
            yield t
            r += 1
            t *= q / (r * (n + r))

    return sum_series(terms(), max_terms=200)


def tricomi_c(s: float, x: float) -> float:
    """Tricomi function C_s(x) = sum (-x)^r / (r! Gamma(r+s+1))."""
    if s > -1:
        def terms() -> Iterator[float]:
            t = reciprocal_gamma(s + 1)
            r = 0
            while True:
                yield t
                r += 1
                t *= -x / (r * (r + s))
        return sum_series(terms())

    def general() -> Iterator[float]:
        r = 0
        power = 1.0
        while True:
            yield power * reciprocal_gamma(r + s + 1)
            r += 1
            power *= -x / r
    return sum_series(general())


def bessel_j0_derivative(n: int, x: float) -> float:
    """n-th derivative of J_0 as a finite combination of J_{n-r}(x)/x^r."""
    if x == 0 and n > 0:
        raise ValueError("the closed derivative formula is singular at x = 0")
    acc = 0.0
    for r in range(n // 2 + 1):
        acc += (-1) ** r / ((2 * x) ** r * math.factorial(r) * math.factorial(n - 2 * r)) * bessel_j(n - r, x)
    return (-1) ** n * math.factorial(n) * acc


def bessel_j0_partial_integral(x: float, terms: int = 60) -> float:
    """Integral of J_0 over [0, x] through the negative-derivative double sum."""
    if x == 0:
        return 0.0
    total = 0.0
    for s in range(terms):
        inner = 0.0
        for r in range(s // 2 + 1):
            inner += (-1) ** r / ((2 * x) ** r * math.factorial(r) * math.factorial(s - 2 * r)) * bessel_j(s - r, x)
        total += x ** (s + 1) / (s + 1) * inner
    return total


# --- truncated exponentials ---------------------------------------------------

def truncated_exp(m: int, x: float) -> float:
    """e_m(x) = sum_{r<=m} x^r / r!."""
    if m < 0:
        raise ValueError("truncated_exp needs m >= 0")
    total, t = 0.0, 1.0
    for r in range(m + 1):
        if r:
            t *= x / r
        total += t
    return total


def truncated_exp_k(k: int, m: int, x: float) -> float:
    """Order-k truncated exponential sum_r x^(m-kr) / (m-kr)!."""
    if k < 1 or m < 0:
        raise ValueError("truncated_exp_k needs k >= 1 and m >= 0")
    return sum(x ** (m - k * r) / math.factorial(m - k * r) for r in range(m // k + 1))


# --- Hermite family -----------------------------------------------------------

def hermite_m(m: int, n: int, x: float, y: float) -> float:
    """m-th order two-variable Hermite polynomial n! sum x^(n-mr) y^r / ((n-mr)! r!)."""
    if m < 1 or n < 0:
        raise ValueError("hermite_m needs m >= 1 and n >= 0")
    nf = math.factorial(n)
    total = 0.0
    for r in range(n // m + 1):
        # Integer coefficient keeps large n exact before the float conversion.
        coef = nf // (math.factorial(n - m * r) * math.factorial(r))
        total += float(coef) * x ** (n - m * r) * y ** r
    return total


def hermite2(n: int, x: float, y: float) -> float:
    """Two-variable Hermite polynomial H_n(x, y), generating function exp(xt + yt^2)."""
    return hermite_m(2, n, x, y)


def hermite3(n: int, x: float, y: float, z: float) -> float:
    """Third-order Hermite polynomial with generating function exp(xt + yt^2 + zt^3)."""
    if n < 0:
        raise ValueError("hermite3 needs n >= 0")
    nf = math.factorial(n)
    total = 0.0
    for r in range(n // 3 + 1):
        coef = nf // (math.factorial(r) * math.factorial(n - 3 * r))
        total += float(coef) * z ** r * hermite2(n - 3 * r, x, y)
    return total


def hermite_vacuum(rho: float, y: float) -> float:
    """Vacuum value y^(rho/2) rho! / Gamma(rho/2 + 1) |cos(rho pi/2)|.

    For integer ``rho`` this is 0 when rho is odd and y^s (2s)!/s! when
    rho = 2s; the cosine is snapped so odd orders give an exact zero.
    """
    if is_gamma_pole(rho + 1):
        raise PoleError(f"vacuum weight has a Gamma pole at rho = {rho}")
    c = _abs_cos_half_pi(rho)
    if c == 0.0:
        return 0.0
    if _is_integer(rho):
        s = round(rho) // 2
        return float(math.factorial(2 * s) // math.factorial(s)) * y ** s
    if y < 0:
        raise ValueError("non-integer vacuum orders need y >= 0")
    return y ** (rho / 2) * gamma(rho + 1) * reciprocal_gamma(rho / 2 + 1) * c


def associated_hermite(n: int, x: float, y: float, p: int) -> float:
    """Associated Hermite polynomial H_n(x, y | p)."""
    if n < 0 or p < 0:
        raise ValueError("associated_hermite needs n, p >= 0")
    return sum(math.comb(n, r) * x ** (n - r) * hermite_vacuum(r + p, y) for r in range(n + 1))


def generalized_assoc_hermite(n: int, x: float, y: float, beta: float, alpha: float) -> float:
    """H_n(x, y | beta; alpha): binomial sum with vacuum orders alpha*r + beta."""
    if n < 0:
        raise ValueError("generalized_assoc_hermite needs n >= 0")
    return sum(math.comb(n, r) * x ** (n - r) * hermite_vacuum(alpha * r + beta, y)
               for r in range(n + 1))


def sheffer_e(alpha: float, beta: float, x: float) -> float:
    """Series sum_r x^r/r! Gamma(alpha r+beta+1)/Gamma((alpha r+beta)/2+1) |cos((alpha r+beta) pi/2)|.

    Converges for alpha < 2, and for |x| < 1/4 when alpha = 2.
    """
    if alpha > 2 or alpha == 2 and abs(x) >= 0.25:
        raise ConvergenceError("sheffer_e diverges for these parameters")

    def terms() -> Iterator[float]:
        r = 0
        while True:
            rho = alpha * r + beta
            if is_gamma_pole(rho + 1):
                raise PoleError(f"Gamma pole at order {rho}")
            c = _abs_cos_half_pi(rho)
            if c == 0.0 or x == 0.0 and r > 0:
                yield 0.0
            else:
                log_mag = (r * math.log(abs(x)) if r else 0.0) - math.lgamma(r + 1) \
                    + math.lgamma(rho + 1) - math.lgamma(rho / 2 + 1)
                sign = -1.0 if (x < 0 and r % 2) else 1.0
                if rho + 1 < 0:
                    sign *= math.copysign(1.0, gamma(rho + 1))
                if rho / 2 + 1 < 0:
                    sign *= math.copysign(1.0, gamma(rho / 2 + 1))
                yield sign * c * math.exp(log_mag)
            r += 1

    # Odd-order zeros interleave the terms, so demand a longer quiet run.
    return sum_series(terms(), max_terms=5000, quiet_needed=6)


def gaussian_cos_coefficient(n: int, x: float, a: float, b: float) -> float:
    """F_n(x; a, b) = sum_r C(n,r) H_r(2ax+b, a) cos(x + (n-r) pi/2)."""
    u = 2 * a * x + b
    return sum(math.comb(n, r) * hermite2(r, u, a) * cos_shifted(x, n - r) for r in range(n + 1))


# --- Laguerre and truncated Bessel ---------------------------------------------

def laguerre2(n: int, x: float, y: float) -> float:
    """Two-variable Laguerre polynomial sum_r C(n,r) (-1)^r x^r y^(n-r) / r!."""
    if n < 0:
        raise ValueError("laguerre2 needs n >= 0")
    # exact integer ratio first so large n does not overflow the float conversion
    return sum((math.comb(n, r) / math.factorial(r)) * (-x) ** r * y ** (n - r) for r in range(n + 1))


def bessel_truncated_poly(n: int, x: float, y: float) -> float:
    """b_n(x, y) = n! sum_r (-1)^r x^r y^(n-r) / (r!)^2."""
    if n < 0:
        raise ValueError("bessel_truncated_poly needs n >= 0")
    nf = math.factorial(n)
    return sum((nf / math.factorial(r) ** 2) * (-x) ** r * y ** (n - r) for r in range(n + 1))


# --- Wright, Mittag-Leffler, 1F2 ---------------------------------------------------

def bessel_wright(alpha: float, beta: float, x: float) -> float:
    """W_(alpha,beta)(x) = sum x^r / (r! Gamma(alpha r + beta + 1))."""
    if alpha < 0 or beta < 0:
        raise ValueError("bessel_wright is defined here for alpha, beta >= 0")

    def terms() -> Iterator[float]:
        t = 1.0
        r = 0
        while True:
            yield t * reciprocal_gamma(alpha * r + beta + 1)
            r += 1
            t *= x / r

    return sum_series(terms())


def mittag_leffler(alpha: float, beta: float, x: float) -> float:
    """E_(alpha,beta)(x) = sum x^r / Gamma(alpha r + beta)."""
    if alpha <= 0 or beta <= 0:
        raise ValueError("mittag_leffler needs alpha > 0 and beta > 0")

    def terms() -> Iterator[float]:
        r = 0
        while True:
            arg = alpha * r + beta
            if arg < 170:
                yield x ** r * reciprocal_gamma(arg) if r else reciprocal_gamma(arg)
            elif x == 0:
                yield 0.0
            else:
                sign = -1.0 if (x < 0 and r % 2) else 1.0
                yield sign * math.exp(r * math.log(abs(x)) - math.lgamma(arg))
            r += 1

    return sum_series(terms(), precision_limit=1e15)


def hyp1f2(a: float, b1: float, b2: float, x: float) -> float:
    """Generalized hypergeometric 1F2(a; b1, b2; x)."""
    if is_gamma_pole(b1) or is_gamma_pole(b2):
        raise PoleError("1F2 lower parameters must avoid 0, -1, -2, ...")

    def terms() -> Iterator[float]:
        t = 1.0
        r = 0
        while True:
            yield t
            t *= (a + r) * x / ((b1 + r) * (b2 + r) * (r + 1))
            r += 1

    return sum_series(terms())


# --- generalized heat polynomials -----------------------------------------------

def heat_poly(n: int, nu: float, x: float, y: float) -> float:
    """Generalized heat polynomial P_{n,nu}(x, y)."""
    if n < 0:
        raise ValueError("heat_poly needs n >= 0")
    base = nu + 0.5
    for j in range(n + 1):
        if is_gamma_pole(base + j):
            raise PoleError(f"nu + 1/2 + {j} = {base + j} is a Gamma pole")
    g = gamma(base)
    return g * sum(math.comb(n, r) * x ** (2 * (n - r)) * (4 * y) ** r * reciprocal_gamma(base + n - r)
                   for r in range(n + 1))


# --- quartic Gaussian ----------------------------------------------------------

def laplace_gaussian_moment(x: float, y: float, mu: float, tol: float = 1e-13) -> float:
    """Integral over s > 0 of exp(-x s - y s^2) s^(mu-1).

    On [0, 1] the substitution s = u^(1/mu) removes the endpoint
    singularity; the rest of the half-line is integrated directly.
    """
    from .numeric import integrate_finite, integrate_halfline_decaying

    if mu <= 0:
        raise ValueError("mu must be positive")
    if y < 0 or y == 0 and x <= 0:
        raise ValueError("need y > 0, or y = 0 with x > 0")
    p = 1.0 / mu

    def near(u: float) -> float:
        s = u ** p
        return math.exp(-x * s - y * s * s) / mu

    def far(s: float) -> float:
        return math.exp(-x * s - y * s * s) * s ** (mu - 1)

    head = integrate_finite(near, 0.0, 1.0, tol)
    tail = integrate_halfline_decaying(far, tol, a=1.0)
    return head.value + tail.value


def quartic_gaussian_integral(x: float, y: float) -> float:
    """I(x, y): integral over the real line of exp(-x z^2 - y z^4), via the s-integral."""
    if y < 0 or y == 0 and x <= 0:
        raise ValueError("quartic_gaussian_integral needs y > 0, or y = 0 with x > 0")
    return laplace_gaussian_moment(x, y, 0.5)


def quartic_gaussian_pcf(x: float, y: float) -> float:
    """I(x, y) through the parabolic cylinder function D_{-1/2}.

    I = sqrt(pi) (2y)^(-1/4) exp(x^2/(8y)) D_{-1/2}(x / sqrt(2y)).
    """
    from scipy.special import pbdv

    if y <= 0:
        raise ValueError("the parabolic-cylinder form needs y > 0")
    d, _ = pbdv(-0.5, x / math.sqrt(2 * y))
    return math.sqrt(math.pi) * (2 * y) ** -0.25 * math.exp(x * x / (8 * y)) * d


FUNCTIONS: dict[str, Callable[..., float]] = {
    "bessel_j": bessel_j,
    "tricomi_c": tricomi_c,
    "truncated_exp": truncated_exp,
    "truncated_exp_k": truncated_exp_k,
    "hermite2": hermite2,
    "hermite_m": hermite_m,
    "hermite3": hermite3,
    "laguerre2": laguerre2,
    "bessel_truncated_poly": bessel_truncated_poly,
    "bessel_wright": bessel_wright,
    "mittag_leffler": mittag_leffler,
    "heat_poly": heat_poly,
    "associated_hermite": associated_hermite,
    "generalized_assoc_hermite": generalized_assoc_hermite,
    "sheffer_e": sheffer_e,
    "hyp1f2": hyp1f2,
    "quartic_gaussian_integral": quartic_gaussian_integral,
    "quartic_gaussian_pcf": quartic_gaussian_pcf,
    "gaussian_cos_coefficient": gaussian_cos_coefficient,
    "bessel_j0_derivative": bessel_j0_derivative,
    "bessel_j0_partial_integral": bessel_j0_partial_integral,
}

# Arguments that must be passed as integers when called by name.
INTEGER_ARGS: dict[str, tuple[int, ...]] = {
    "bessel_j": (0,),
    "truncated_exp": (0,),
    "truncated_exp_k": (0, 1),
    "hermite2": (0,),
    "hermite_m": (0, 1),
    "hermite3": (0,),
    "laguerre2": (0,),
    "bessel_truncated_poly": (0,),
    "heat_poly": (0,),
    "associated_hermite": (0, 3),
    "generalized_assoc_hermite": (0,),
    "gaussian_cos_coefficient": (0,),
    "bessel_j0_derivative": (0,),
}
