"""Registry of identities from the umbral/Borel treatment, each paired with an
independent numerical check.

Every entry evaluates two sides through disjoint code paths: one side is
the closed form, the other is a partial sum, a quadrature, a finite
difference or a dense-polynomial computation. Points are plain dicts of
named parameters so reports serialise without any custom encoding.
"""

from __future__ import annotations

import csv
import fnmatch
import io
import json
import math
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy import special as sps

from . import generating as gen
from . import operators as ops
from . import special as sf
from .generating import DomainError
from .numeric import (
    DensePolynomial,
    finite_difference,
    integrate_finite,
    integrate_halfline_decaying,
    integrate_halfline_oscillatory,
    integrate_line_decaying,
    monomial,
    poly_add,
    poly_antiderivative,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_pow,
)
from .series import (
    PoleError,
    TruncatedPowerSeries,
    exp_series,
    gamma,
    log_abs_gamma,
    reciprocal_gamma,
    series_eval,
    series_from_terms,
    tricomi_c0_series,
    bessel_j0_series,
)

METHODS = ("quadrature", "series-partial-sum", "finite-difference", "polynomial-expansion", "two-route")

TOL_EXACT = 1e-10
TOL_COEFF = 1e-13
TOL_PARTIAL = 1e-8
TOL_QUAD = 1e-6
TOL_PDE = 1e-5
TOL_OSC = 1e-4

Point = dict
Evaluator = Callable[[Point], float]


class UnknownIdentityError(KeyError):
    """No registry entry carries the requested id."""


@dataclass(frozen=True)
class IdentityEntry:
    """One identity: two evaluators, a tolerance and where to evaluate.

    ``domain`` returns a reason string when a point lies outside the
    region where the identity holds, else None. Entries with a
    ``skipped_reason`` are registered for completeness but never run.
    """

    id: str
    description: str
    method: str
    tol: float
    lhs: Optional[Evaluator]
    rhs: Optional[Evaluator]
    grid: tuple = ()
    sampler: Optional[Callable[[np.random.Generator], Point]] = None
    domain: Optional[Callable[[Point], Optional[str]]] = None
    skipped_reason: Optional[str] = None
    tags: tuple = ()

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r} for {self.id}")
        if self.skipped_reason is None:
            if self.lhs is None or self.rhs is None:
                raise ValueError(f"{self.id} needs both evaluators")
            if self.lhs is self.rhs:
                raise ValueError(f"{self.id} uses the same evaluator on both sides")
            if not self.grid:
                raise ValueError(f"{self.id} has no evaluation points")

    def default_point(self) -> Point:
        return dict(self.grid[0]) if self.grid else {}


@dataclass
class IdentityReport:
    id: str
    point: Point
    lhs: Optional[float]
    rhs: Optional[float]
    abs_err: Optional[float]
    rel_err: Optional[float]
    tol: float
    status: str
    elapsed_s: float = 0.0
    reason: Optional[str] = None

    FIELDS = ("id", "point", "lhs", "rhs", "abs_err", "rel_err", "tol", "status", "elapsed_s")

    @property
    def numeric_error(self) -> bool:
        return self.status == "fail" and self.reason is not None

    def as_record(self, include_timings: bool = False) -> dict:
        rec = {k: getattr(self, k) for k in self.FIELDS}
        rec["point"] = dict(self.point)
        if not include_timings:
            rec["elapsed_s"] = None
        return rec


def _errors(lhs: float, rhs: float) -> tuple[float, float]:
    """Absolute error and error relative to the larger side (0 when both vanish)."""
    a = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    return a, (a / scale if scale > 0 else 0.0)


# --- shared helpers for the evaluators -----------------------------------------------

def _j0(x: float) -> float:
    # Oracle integrand for oscillatory tails; the defining series loses
    # all precision beyond x ~ 30, so large arguments come from scipy.
    return float(sps.j0(x))


def _hermite_poly(n: int, y: float) -> DensePolynomial:
    """H_n(., y) as a dense polynomial, built as sum_k y^k/k! D^(2k) x^n."""
    p = DensePolynomial([0.0])
    xn = monomial(n)
    for k in range(n // 2 + 1):
        term = poly_derivative(xn, 2 * k)
        p = poly_add(p, DensePolynomial(term.coeffs * (y ** k / math.factorial(k))))
    return p


def _hermite_m_poly(m: int, n: int, y: float) -> DensePolynomial:
    p = DensePolynomial([0.0])
    xn = monomial(n)
    for k in range(n // m + 1):
        term = poly_derivative(xn, m * k)
        p = poly_add(p, DensePolynomial(term.coeffs * (y ** k / math.factorial(k))))
    return p


def _coeff_grid(order: int = 40, step: int = 4) -> tuple:
    return tuple({"r": r} for r in range(0, order + 1, step))


def _series_coeff(s: TruncatedPowerSeries, r: int) -> float:
    return float(s.coeffs[r])


def _lacunary_partial(term: Callable[[int], float], count: int) -> float:
    return math.fsum(term(n) for n in range(count))


def _osc(f: Callable[[float], float], zeros: Optional[Callable[[int], float]] = None,
         tol: float = 1e-7) -> float:
    return integrate_halfline_oscillatory(f, tol=tol, zeros=zeros).value


def _sin_cuts(k: int) -> float:
    return (k + 1) * math.pi


def _cos_cuts(k: int) -> float:
    return (k + 0.5) * math.pi


# Bessel J0 zeros serve as lobe cuts for integrands with a J0(u) factor.
_J0_ZEROS = sps.jn_zeros(0, 64)


def _j0_zero_cuts(k: int) -> float:
    return float(_J0_ZEROS[k])


# --- Bessel-type integrals ----------------------------------------------------------

def _j0_halfline_quad(p: Point) -> float:
    return _osc(_j0)


def _j0_mellin_quad(p: Point) -> float:
    nu = p["nu"]
    # lobe cuts at the zeros of J0 keep the scan away from the x^(nu-1) singularity
    return _osc(lambda x: _j0(x) * x ** (nu - 1), zeros=_j0_zero_cuts)


def _j0_square_quad(p: Point) -> float:
    # u = x^2 turns J0(x^2) into J0(u)/(2 sqrt(u)), whose lobes are regular.
    return _osc(lambda u: _j0(u) / (2 * math.sqrt(u)), zeros=_j0_zero_cuts)


def _gauss_bessel_quad(p: Point) -> float:
    b = p["b"]
    return integrate_halfline_decaying(lambda x: math.exp(-x * x) * _j0(b * x), 1e-12).value


def _hankel_quad(p: Point) -> float:
    s = p["s"]

    def integrand(r: float) -> float:
        f = math.exp(-r * r) / r
        return f * _j0(s * r) * r

    return integrate_halfline_decaying(integrand, 1e-12).value


def _j0_sqrt_trig_quad(trig: Callable[[float], float], cuts: Callable[[int], float]) -> Evaluator:
    def ev(p: Point) -> float:
        x = p["x"]
        return _osc(lambda u: _j0(2 * math.sqrt(x * u)) * trig(u), zeros=cuts)
    return ev


def _tricomi_trig_quad(trig: Callable[[float], float], cuts: Callable[[int], float]) -> Evaluator:
    def ev(p: Point) -> float:
        s, x = p["s"], p["x"]

        def integrand(u: float) -> float:
            if u == 0.0:
                # J_s(2 sqrt(xu)) u^(-s/2) -> x^(s/2)/s! as u -> 0
                return x ** (s / 2) / math.factorial(s) * trig(0.0)
            return float(sps.jv(s, 2 * math.sqrt(x * u))) * u ** (-s / 2) * trig(u)

        return _osc(integrand, zeros=cuts)
    return ev


def _selfreciprocal_quad(p: Point) -> float:
    x = p["x"]
    return _osc(lambda u: _j0(2 * math.sqrt(x * u)) * _j0(u), zeros=_j0_zero_cuts)


def _j0_partial_quad(p: Point) -> float:
    return integrate_finite(lambda t: sf.bessel_j(0, t), 0.0, p["x"], 1e-13).value


def _j0_derivative_fd(p: Point) -> float:
    return finite_difference(lambda t: sf.bessel_j(0, t), p["x"], p["n"])


# --- Borel coefficient checks --------------------------------------------------------

_ORDER = 40


def _borel_k_c0(k: int) -> Evaluator:
    def ev(p: Point) -> float:
        s = tricomi_c0_series(_ORDER)
        T = ops.borel(1.0, 1.0).power(k) if k > 1 else ops.borel(1.0, 1.0)
        out, _ = ops.apply_transform(s, T)
        return _series_coeff(out, p["r"])
    return ev


def _borel3_flag(p: Point) -> float:
    out, flag = ops.apply_transform(tricomi_c0_series(_ORDER), ops.borel(1.0, 1.0).power(3))
    return 1.0 if flag.status == "divergent" else 0.0


def _borel_half_j0(p: Point) -> float:
    out, _ = ops.apply_transform(bessel_j0_series(_ORDER), ops.borel(0.5, 1.0))
    return _series_coeff(out, p["r"])


def _gaussian_quarter_coeff(p: Point) -> float:
    # exp(-(x/2)^2) = sum_k (-1)^k x^(2k) / (4^k k!)
    r = p["r"]
    if r % 2:
        return 0.0
    k = r // 2
    return (-1) ** k / (4 ** k * math.factorial(k))


def _borel_scaling_quad(p: Point) -> float:
    alpha = p["alpha"]

    def transformed(x: float) -> float:
        # alpha-order Borel image of exp(-x^2) in its integral form. For
        # alpha > 0 the mass sits at t ~ |x|^(-1/alpha), so t is rescaled
        # by that width before integrating.
        sigma = (1 + x * x) ** (-0.5 / alpha) if alpha > 0 else 1.0

        def kernel(u: float) -> float:
            t = sigma * u
            if t <= 0:
                return 1.0 if alpha > 0 else 0.0
            return math.exp(-t - (t ** alpha * x) ** 2)

        return sigma * integrate_halfline_decaying(kernel, 1e-300, rtol=1e-12).value

    return integrate_line_decaying(transformed, 1e-10).value


def _borel_scaling_closed(p: Point) -> float:
    return ops.borel_integral_scaling(math.sqrt(math.pi), p["alpha"])


def _ij0_borel_route(p: Point) -> float:
    image = integrate_line_decaying(lambda x: math.exp(-(x / 2) ** 2), 1e-13).value
    return image / gamma(0.5)


# --- Laguerre family -------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.laguerre.laggauss(40)


def _gauss_laguerre(f: Callable[[float], float]) -> float:
    return math.fsum(float(w) * f(float(t)) for t, w in zip(_GL_NODES, _GL_WEIGHTS))


def _laguerre_laplace_quad(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return _gauss_laguerre(lambda t: sf.laguerre2(n, x * t, y))


def _laguerre_borel_y_quad(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return _gauss_laguerre(lambda t: sf.laguerre2(n, x, y * t))


def _laguerre_gf_partial(p: Point) -> float:
    x, y, xi = p["x"], p["y"], p["xi"]
    return _lacunary_partial(lambda n: xi ** n * sf.laguerre2(n, x, y), 90)


def _laguerre_lacunary_partial(p: Point) -> float:
    x, y, xi = p["x"], p["y"], p["xi"]
    return _lacunary_partial(lambda n: xi ** n * sf.laguerre2(2 * n, x, y), 60)


def _laguerre_exp_partial(p: Point) -> float:
    x, y, xi = p["x"], p["y"], p["xi"]
    return _lacunary_partial(lambda n: xi ** n / math.factorial(n) * sf.laguerre2(n, x, y), 60)


def _bessel_trunc_partial(p: Point) -> float:
    x, y, xi = p["x"], p["y"], p["xi"]
    return _lacunary_partial(lambda n: xi ** n / math.factorial(n) * sf.bessel_truncated_poly(n, x, y), 90)


# --- Borel-Leroy and B-Borel ------------------------------------------------------------

def _tricomi_series(g: float, order: int = _ORDER) -> TruncatedPowerSeries:
    return series_from_terms(lambda r: (-1) ** r * reciprocal_gamma(r + 1) * reciprocal_gamma(r + g + 1), order)


def _bl_tricomi_coeff(p: Point) -> float:
    a, g, r = p["alpha"], p["gamma"], p["r"]
    out, _ = ops.apply_transform(_tricomi_series(g), ops.borel_leroy(a, g + 1))
    return _series_coeff(out, r)


def _e_alpha_gamma_coeff(p: Point) -> float:
    a, g, r = p["alpha"], p["gamma"], p["r"]
    la, sa = log_abs_gamma(a * r + g + 1)
    lb, sb = log_abs_gamma(r + g + 1)
    return (-1) ** r * sa * sb * math.exp(la - math.lgamma(r + 1) - lb)


def _bw_antitransform_series(p: Point) -> float:
    a, g, x = p["alpha"], p["gamma"], p["x"]
    out, _ = ops.apply_transform(exp_series(_ORDER, -1.0), ops.borel_leroy(a, g + 1).inverted())
    return series_eval(out, x)


def _bborel_wright_series(p: Point) -> float:
    a, b, x = p["alpha"], p["beta"], p["x"]
    w0 = series_from_terms(lambda r: reciprocal_gamma(r + 1) * reciprocal_gamma(a * r + 1) / gamma(b), _ORDER)
    out, _ = ops.apply_transform(w0, ops.bborel(a, 1.0, b, 0.0, normalized=False))
    return series_eval(out, x)


def _bborel_ml_series(p: Point) -> float:
    b, x = p["beta"], p["x"]
    e = TruncatedPowerSeries(exp_series(_ORDER).coeffs / gamma(b))
    out, _ = ops.apply_transform(e, ops.bborel(1.0, 1.0, b, 0.0, normalized=False))
    return series_eval(out, x)


def _ml_neg(beta: float, u: float) -> float:
    # E_(1, beta+1)(-u) = 1F1(1; beta+1; -u) / Gamma(beta+1), stable for large u
    return float(sps.hyp1f1(1.0, beta + 1.0, -u)) / gamma(beta + 1.0)


def _ml_gaussian_quad(p: Point) -> float:
    b = p["beta"]
    return integrate_line_decaying(lambda x: _ml_neg(b, x * x), 1e-11).value


# --- Hermite family ---------------------------------------------------------------------

def _doetsch_partial(p: Point) -> float:
    x, y, t = p["x"], p["y"], p["t"]
    return _lacunary_partial(lambda n: t ** n / math.factorial(n) * sf.hermite2(2 * n, x, y), 60)


def _doetsch_general_partial(p: Point) -> float:
    x, y, t, l = p["x"], p["y"], p["t"], p["l"]
    return _lacunary_partial(lambda n: t ** n / math.factorial(n) * sf.hermite2(2 * n + l, x, y), 60)


def _doetsch_domain(p: Point) -> Optional[str]:
    if abs(4 * p["y"] * p["t"]) >= 1:
        return "outside |t| < 1/(4|y|)"
    return None


def _doetsch_sampler(rng: np.random.Generator) -> Point:
    x = float(rng.uniform(-1.5, 1.5))
    y = float(rng.uniform(-1.0, 1.0))
    tmax = min(0.5, 1 / (8 * abs(y))) if y != 0 else 0.5
    t = float(rng.uniform(-tmax, tmax))
    return {"x": x, "y": y, "t": t}


def _doetsch_general_sampler(rng: np.random.Generator) -> Point:
    p = _doetsch_sampler(rng)
    p["l"] = int(rng.integers(1, 3))
    return p


def _hermite_gf_partial(p: Point) -> float:
    x, y, t = p["x"], p["y"], p["t"]
    return _lacunary_partial(lambda n: t ** n / math.factorial(n) * sf.hermite2(n, x, y), 60)


def _hermite3_gf_partial(p: Point) -> float:
    x, y, z, t = p["x"], p["y"], p["z"], p["t"]
    return _lacunary_partial(lambda n: t ** n / math.factorial(n) * sf.hermite3(n, x, y, z), 30)


def _hermite_m_operational(p: Point) -> float:
    m, n, x, y = p["m"], p["n"], p["x"], p["y"]
    return poly_eval(_hermite_m_poly(m, n, y), x)


def _h_weight_sum(z: float, y: float, count: int, power: int = 1) -> float:
    w = ops.h_hat(y)
    return math.fsum(z ** r / math.factorial(r) * w(power * r) for r in range(count))


def _umbral_h_exp_sum(p: Point) -> float:
    return _h_weight_sum(p["z"], p["y"], 60)


def _umbral_h_sq_sum(p: Point) -> float:
    return _h_weight_sum(p["z"], p["y"], 90, power=2)


def _umbral_h_shift_sum(p: Point) -> float:
    x, y, t = p["x"], p["y"], p["t"]
    w = ops.h_hat(y)
    return math.fsum(w(r) / math.factorial(r) * sf.hermite2(r, 2 * x * t, t) for r in range(120))


def _triple_lacunary_lhs(p: Point) -> float:
    x, y, t = p["x"], p["y"], p["t"]
    return _lacunary_partial(lambda n: t ** n / math.factorial(n) * sf.hermite2(3 * n, x, y), 30)


def _hermite_vacuum_formula(p: Point) -> float:
    return ops.h_hat(p["y"])(p["n"])


def _assoc_index_dup(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return math.factorial(n) * math.fsum(
        x ** (n - s) / (math.factorial(n - s) * math.factorial(s)) * sf.associated_hermite(n, x, y, s)
        for s in range(n + 1))


def _assoc_arg_dup(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return math.fsum(
        math.comb(n, s) * math.comb(s, r) * x ** r * sf.associated_hermite(n - s, x, y / 4, s - r)
        for s in range(n + 1) for r in range(s + 1))


def _assoc_xn(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return math.fsum(math.comb(n, r) * (-1) ** r * sf.associated_hermite(n - r, x, y, r) for r in range(n + 1))


def _nielsen(p: Point) -> float:
    n, m, x, y = p["n"], p["m"], p["x"], p["y"]
    return math.fsum(math.comb(m, r) * x ** (m - r) * sf.associated_hermite(n, x, y, r) for r in range(m + 1))


def _poly_point_sampler(nmax: int = 6, with_m: bool = False) -> Callable[[np.random.Generator], Point]:
    def sample(rng: np.random.Generator) -> Point:
        p = {"n": int(rng.integers(0, nmax + 1)),
             "x": float(rng.uniform(-1.5, 1.5)), "y": float(rng.uniform(-1.0, 1.0))}
        if with_m:
            p["m"] = int(rng.integers(0, nmax + 1))
        return p
    return sample


def _gen_assoc_partial(p: Point) -> float:
    x, y, t, a, b = p["x"], p["y"], p["t"], p["alpha"], p["beta"]
    return _lacunary_partial(
        lambda n: t ** n / math.factorial(n) * sf.generalized_assoc_hermite(n, x, y, b, a), 26)


def _bilateral_partial(p: Point) -> float:
    x, y, z, w, t = p["x"], p["y"], p["z"], p["w"], p["t"]
    # order the products so the n! division happens before the second factor
    return _lacunary_partial(
        lambda n: (t ** n / math.factorial(n) * sf.hermite2(n, x, y)) * sf.hermite2(n, z, w), 120)


def _bilateral_sampler(rng: np.random.Generator) -> Point:
    x, z = (float(v) for v in rng.uniform(-1, 1, 2))
    y, w = (float(v) for v in rng.uniform(-1, 1, 2))
    tmax = min(0.8, math.sqrt(0.5 / max(abs(4 * w * y), 1e-12)))
    t = float(rng.uniform(-tmax, tmax))
    return {"x": x, "y": y, "z": z, "w": w, "t": t}


def _quartic_z_route(p: Point) -> float:
    x, y = p["x"], p["y"]
    return integrate_line_decaying(lambda z: math.exp(-x * z * z - y * z ** 4), 1e-12).value


# --- heat polynomials ---------------------------------------------------------------------

def _heat_exp_partial(p: Point) -> float:
    nu, x, y, t = p["nu"], p["x"], p["y"], p["t"]
    return _lacunary_partial(lambda n: t ** n / math.factorial(n) * sf.heat_poly(n, nu, x, y), 60)


def _heat_geom_partial(p: Point) -> float:
    nu, x, y, t = p["nu"], p["x"], p["y"], p["t"]
    return _lacunary_partial(lambda n: t ** n * sf.heat_poly(n, nu, x, y), 90)


def _heat_half_rhs(p: Point) -> float:
    return sf.laguerre2(p["n"], -p["x"] ** 2, 4 * p["y"])


def _heat_zero_rhs(p: Point) -> float:
    n = p["n"]
    return 4 ** n * math.factorial(n) / math.factorial(2 * n) * sf.hermite2(2 * n, p["x"], p["y"])


def _fd_y(f: Callable[[float, float], float], x: float, y: float) -> float:
    return finite_difference(lambda s: f(x, s), y, 1)


def _fd_x(f: Callable[[float, float], float], x: float, y: float, order: int) -> float:
    return finite_difference(lambda s: f(s, y), x, order)


def _heat_eq_dy(p: Point) -> float:
    return _fd_y(lambda a, b: sf.hermite2(p["n"], a, b), p["x"], p["y"])


def _heat_eq_dxx(p: Point) -> float:
    return _fd_x(lambda a, b: sf.hermite2(p["n"], a, b), p["x"], p["y"], 2)


def _ghp(p: Point) -> Callable[[float, float], float]:
    return lambda a, b: sf.heat_poly(p["n"], p["nu"], a, b)


def _ghp_dy(p: Point) -> float:
    return _fd_y(_ghp(p), p["x"], p["y"])


def _ghp_radial(p: Point) -> float:
    f, x, y = _ghp(p), p["x"], p["y"]
    return _fd_x(f, x, y, 2) + 2 * p["nu"] / x * _fd_x(f, x, y, 1)


def _ghp_laguerre_derivative(p: Point) -> float:
    # (2/x) [ (1/2) d/dx x d/dx + (nu - 1/2) d/dx ] P
    f, x, y, nu = _ghp(p), p["x"], p["y"], p["nu"]
    lag = finite_difference(lambda s: s * finite_difference(lambda u: f(u, y), s, 1, h=1e-3 * max(1, abs(s))), x, 1)
    return 2 / x * (0.5 * lag + (nu - 0.5) * _fd_x(f, x, y, 1))


def _pde_sampler(with_nu: bool) -> Callable[[np.random.Generator], Point]:
    def sample(rng: np.random.Generator) -> Point:
        p = {"n": int(rng.integers(0, 7)), "x": float(rng.uniform(0.3, 1.5)), "y": float(rng.uniform(-1, 1))}
        if with_nu:
            p["nu"] = float(rng.choice([0.25, 1.5]))
        else:
            p["n"] = int(rng.integers(0, 9))
            p["x"] = float(rng.uniform(-1.5, 1.5))
        return p
    return sample


# --- negative-derivative integrals -------------------------------------------------------

def _gaussian_exp_quad(p: Point) -> float:
    a, b, x = p["a"], p["b"], p["x"]
    return integrate_finite(lambda t: math.exp(a * t * t + b * t), 0.0, x, 1e-13).value


def _gaussian_cos_quad(p: Point) -> float:
    a, b, x = p["a"], p["b"], p["x"]
    return integrate_finite(lambda t: math.exp(a * t * t + b * t) * math.cos(t), 0.0, x, 1e-13).value


def _hermite_cos_quad(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return integrate_finite(lambda t: sf.hermite2(n, t, y) * math.cos(t), 0.0, x, 1e-13).value


def _hermite_integral_x_poly(p: Point) -> float:
    return poly_eval(poly_antiderivative(_hermite_poly(p["n"], p["y"])), p["x"])


def _hermite_integral_y_quad(p: Point) -> float:
    n, x, y = p["n"], p["x"], p["y"]
    return integrate_finite(lambda s: sf.hermite2(n, x, s), 0.0, y, 1e-13).value


def _hermite_product_closed(p: Point) -> float:
    n, m, x, y = p["n"], p["m"], p["x"], p["y"]
    return ops.hermite_product_integral(n, m, x, y) - ops.hermite_product_integral(n, m, 0.0, y)


def _hermite_product_poly(p: Point) -> float:
    prod = poly_mul(_hermite_poly(p["n"], p["y"]), _hermite_poly(p["m"], p["y"]))
    return poly_eval(poly_antiderivative(prod), p["x"])


def _hermite_product_power_poly(p: Point) -> float:
    prod = poly_mul(poly_mul(_hermite_poly(p["n"], p["y"]), _hermite_poly(p["m"], p["y"])), monomial(p["p"]))
    return poly_eval(poly_antiderivative(prod), p["x"])


def _trinomial_poly(p: Point) -> float:
    q = DensePolynomial([p["c"], p["b"], p["a"]])
    return poly_eval(poly_derivative(poly_pow(q, p["n"]), p["m"]), p["x"])


def _trinomial_sampler(rng: np.random.Generator) -> Point:
    a, b, c = (float(v) for v in rng.uniform(-2, 2, 3))
    return {"m": int(rng.integers(0, 5)), "n": int(rng.integers(0, 7)), "a": a, "b": b, "c": c,
            "x": float(rng.uniform(-1.5, 1.5))}


# --- registry ------------------------------------------------------------------------------

def _grid(**axes: Sequence) -> tuple:
    """Cartesian product of named axes, in the order given."""
    points: list[dict] = [{}]
    for name, values in axes.items():
        points = [{**p, name: v} for p in points for v in values]
    return tuple(points)


def _build_registry() -> dict[str, IdentityEntry]:
    E = IdentityEntry
    entries = [
        E("J0_halfline", "integral of J0 over the half-line equals 1", "quadrature", TOL_OSC,
          _j0_halfline_quad, lambda p: gen.bessel_j0_halfline_integral(), grid=({},), tags=("bessel",)),
        E("J0_mellin", "Mellin transform of J0 as a Gaussian moment in the Bessel umbra", "quadrature", TOL_OSC,
          _j0_mellin_quad, lambda p: gen.bessel_j0_mellin(p["nu"]), grid=_grid(nu=(0.5, 1.0, 1.25)),
          domain=lambda p: None if 0 < p["nu"] < 1.5 else "need 0 < nu < 3/2", tags=("bessel",)),
        E("J0_square_arg", "integral of J0(x^2) over the half-line", "quadrature", TOL_OSC,
          _j0_square_quad, lambda p: gen.bessel_j0_square_arg_integral(), grid=({},), tags=("bessel",)),
        E("gauss_bessel", "Gaussian-weighted J0 integral as a binomial series in the umbra", "quadrature",
          TOL_QUAD, _gauss_bessel_quad, lambda p: gen.gauss_bessel_integral(p["b"]),
          grid=_grid(b=(0.5, 1.0)), sampler=lambda rng: {"b": float(rng.uniform(0.1, 2.0))}, tags=("bessel",)),
        E("hankel_example", "order-0 Hankel transform of exp(-r^2)/r", "quadrature", TOL_QUAD,
          _hankel_quad, lambda p: gen.hankel_gauss_over_r(p["s"]), grid=_grid(s=(0.5, 1.0)),
          sampler=lambda rng: {"s": float(rng.uniform(0.1, 2.0))}, tags=("bessel",)),
        E("J0_sqrt_sin", "J0(2 sqrt(xu)) against sin u gives cos x", "quadrature", TOL_OSC,
          _j0_sqrt_trig_quad(math.sin, _sin_cuts), lambda p: math.cos(p["x"]), grid=_grid(x=(0.5, 1.0)),
          tags=("bessel",)),
        E("J0_sqrt_cos", "J0(2 sqrt(xu)) against cos u gives sin x", "quadrature", TOL_OSC,
          _j0_sqrt_trig_quad(math.cos, _cos_cuts), lambda p: math.sin(p["x"]), grid=_grid(x=(0.5, 1.0)),
          tags=("bessel",)),
        E("tricomi_sin", "Tricomi-Bessel sine integral as a 1F2", "quadrature", TOL_OSC,
          _tricomi_trig_quad(math.sin, _sin_cuts), lambda p: gen.tricomi_sin_integral(p["s"], p["x"]),
          grid=_grid(s=(1, 2), x=(0.5, 1.0)), tags=("bessel", "tricomi")),
        E("tricomi_cos", "Tricomi-Bessel cosine integral as a 1F2", "quadrature", TOL_OSC,
          _tricomi_trig_quad(math.cos, _cos_cuts), lambda p: gen.tricomi_cos_integral(p["s"], p["x"]),
          grid=_grid(s=(1, 2), x=(0.5, 1.0)), tags=("bessel", "tricomi")),
        E("tricomi_selfreciprocal", "C0(xu) against J0(u) reproduces J0(x)", "quadrature", TOL_OSC,
          _selfreciprocal_quad, lambda p: sf.bessel_j(0, p["x"]), grid=_grid(x=(0.5, 1.0)),
          tags=("bessel", "tricomi")),
        E("J0_tricomi_link", "J0(2 sqrt x) equals C0(x)", "two-route", 1e-12,
          lambda p: sf.bessel_j(0, 2 * math.sqrt(p["x"])), lambda p: sf.tricomi_c(0, p["x"]),
          grid=_grid(x=tuple(9 * k / 49 for k in range(50))), tags=("bessel", "tricomi")),
        E("J0_partial_integral", "integral of J0 over [0, x] by the negative-derivative double sum",
          "quadrature", TOL_QUAD, lambda p: sf.bessel_j0_partial_integral(p["x"]), _j0_partial_quad,
          grid=_grid(x=(0.5, 1.0, 2.0)), sampler=lambda rng: {"x": float(rng.uniform(0.1, 3.0))},
          tags=("bessel",)),
        E("J0_derivative_formula", "closed sum for the n-th derivative of J0", "finite-difference", TOL_QUAD,
          lambda p: sf.bessel_j0_derivative(p["n"], p["x"]), _j0_derivative_fd,
          grid=_grid(n=(1, 2, 3, 4), x=(0.7, 1.5, 3.0)),
          sampler=lambda rng: {"n": int(rng.integers(1, 5)), "x": float(rng.uniform(0.3, 4.0))},
          tags=("bessel",)),
        # Borel transforms at coefficient level
        E("borel_C0", "Borel transform of C0 is exp(-x)", "series-partial-sum", TOL_COEFF,
          _borel_k_c0(1), lambda p: (-1) ** p["r"] / math.factorial(p["r"]), grid=_coeff_grid(),
          tags=("borel",)),
        E("borel2_C0", "second Borel transform of C0 is 1/(1+x)", "series-partial-sum", TOL_COEFF,
          _borel_k_c0(2), lambda p: float((-1) ** p["r"]), grid=_coeff_grid(), tags=("borel",)),
        E("borel3_C0", "third Borel transform of C0 has coefficients (-1)^r r!", "series-partial-sum",
          TOL_COEFF, _borel_k_c0(3), lambda p: float((-1) ** p["r"] * math.factorial(p["r"])),
          grid=_coeff_grid(), tags=("borel",)),
        E("borel3_C0_divergent", "third Borel transform of C0 is flagged divergent (1 = flagged)",
          "series-partial-sum", 0.0, _borel3_flag, lambda p: 1.0, grid=({},), tags=("borel",)),
        E("borelhalf_J0", "half-order Borel transform of J0 is exp(-(x/2)^2)", "series-partial-sum",
          TOL_COEFF, _borel_half_j0, _gaussian_quarter_coeff, grid=_coeff_grid(), tags=("borel",)),
        E("borel_scaling", "line integral of the alpha-order Borel image scales by Gamma(1 - alpha)",
          "quadrature", TOL_QUAD, _borel_scaling_quad, _borel_scaling_closed,
          grid=_grid(alpha=(-0.5, 0.5, 0.25)),
          domain=lambda p: None if abs(p["alpha"]) < 1 else "need |alpha| < 1", tags=("borel",)),
        E("I_J0_recovery", "line integral of J0 recovered from its half-order Borel image", "quadrature",
          TOL_QUAD, _ij0_borel_route, lambda p: 2.0, grid=({},), tags=("borel", "bessel")),
        # Laguerre family
        E("laguerre_laplace", "(y - x)^n as a Laplace integral of L_n(xt, y)", "quadrature", TOL_PARTIAL,
          lambda p: (p["y"] - p["x"]) ** p["n"], _laguerre_laplace_quad,
          grid=_grid(n=tuple(range(6)), x=(0.4,), y=(1.1,)),
          sampler=lambda rng: {"n": int(rng.integers(0, 6)), "x": float(rng.uniform(-1, 1)),
                               "y": float(rng.uniform(-1, 1.5))}, tags=("laguerre",)),
        E("laguerre_borel_y", "Borel transform in y maps L_n to the truncated Bessel polynomial b_n",
          "quadrature", TOL_PARTIAL, lambda p: sf.bessel_truncated_poly(p["n"], p["x"], p["y"]),
          _laguerre_borel_y_quad, grid=_grid(n=tuple(range(6)), x=(0.4,), y=(1.1,)), tags=("laguerre",)),
        E("laguerre_gf", "generating function of two-variable Laguerre polynomials", "series-partial-sum",
          TOL_PARTIAL, _laguerre_gf_partial, lambda p: gen.laguerre_gf(p["x"], p["y"], p["xi"]),
          grid=({"x": 0.5, "y": 1.0, "xi": 0.3}, {"x": 1.2, "y": 0.7, "xi": -0.5}, {"x": -0.8, "y": -2.0, "xi": 0.25}),
          sampler=lambda rng: (lambda y: {"x": float(rng.uniform(-1.5, 1.5)), "y": y,
                                          "xi": float(rng.uniform(-0.5, 0.5)) / max(abs(y), 1.0)})(
              float(rng.uniform(-2, 2))),
          domain=lambda p: None if abs(p["y"] * p["xi"]) < 1 else "need |y xi| < 1", tags=("laguerre",)),
        E("laguerre_lacunary", "even-index lacunary generating function of Laguerre polynomials",
          "series-partial-sum", TOL_PARTIAL, _laguerre_lacunary_partial,
          lambda p: gen.laguerre_lacunary_gf(p["x"], p["y"], p["xi"]),
          grid=({"x": 0.5, "y": 1.0, "xi": 0.16}, {"x": -0.7, "y": 0.5, "xi": 0.3}, {"x": 1.1, "y": -2.0, "xi": 0.04}),
          sampler=lambda rng: (lambda y: {"x": float(rng.uniform(-1.5, 1.5)), "y": y,
                                          "xi": (float(rng.uniform(0, 0.4)) / max(abs(y), 0.5)) ** 2})(
              float(rng.uniform(-2, 2))),
          domain=lambda p: None if p["xi"] >= 0 and math.sqrt(p["xi"]) * abs(p["y"]) < 1
          else "need xi >= 0 and sqrt(xi)|y| < 1", tags=("laguerre",)),
        E("laguerre_exp_gf", "exponential generating function of Laguerre polynomials", "series-partial-sum",
          TOL_PARTIAL, _laguerre_exp_partial, lambda p: gen.laguerre_exp_gf(p["x"], p["y"], p["xi"]),
          grid=({"x": 0.5, "y": 1.0, "xi": 0.8}, {"x": -1.0, "y": 0.3, "xi": -1.5}), tags=("laguerre",)),
        E("bessel_trunc_gf", "generating function of truncated Bessel polynomials", "series-partial-sum",
          TOL_PARTIAL, _bessel_trunc_partial, lambda p: gen.bessel_trunc_gf(p["x"], p["y"], p["xi"]),
          grid=({"x": 0.5, "y": 1.0, "xi": 0.3}, {"x": -1.0, "y": 0.5, "xi": -1.0}, {"x": 2.0, "y": -1.5, "xi": 0.2}),
          domain=lambda p: None if abs(p["y"] * p["xi"]) < 1 else "need |y xi| < 1", tags=("laguerre",)),
        # Borel-Leroy, Bessel-Wright, B-Borel, Mittag-Leffler
        E("BL_tricomi", "Borel-Leroy image of the gamma-order Tricomi function", "series-partial-sum",
          TOL_EXACT, _bl_tricomi_coeff, _e_alpha_gamma_coeff,
          grid=tuple({"alpha": a, "gamma": g, "r": r} for a, g in ((0.5, 0.5), (1.5, 1.0), (2.0, 0.3))
                     for r in (0, 1, 2, 5, 10, 20, 40)), tags=("borel", "tricomi")),
        E("BW_antitransform", "inverse Borel-Leroy transform of exp(-x) is a Bessel-Wright function",
          "series-partial-sum", TOL_EXACT, _bw_antitransform_series,
          lambda p: sf.bessel_wright(p["alpha"], p["gamma"], -p["x"]),
          grid=_grid(alpha=(0.5, 1.0, 1.5), gamma=(0.0, 0.5, 2.0), x=(0.7, -1.2)), tags=("borel",)),
        E("bborel_wright", "B-Borel transform raises the Bessel-Wright order", "series-partial-sum",
          TOL_EXACT, _bborel_wright_series, lambda p: sf.bessel_wright(p["alpha"], p["beta"], p["x"]),
          grid=_grid(alpha=(0.5, 1.0, 1.5), beta=(0.5, 2.0), x=(0.7, -1.2)), tags=("borel",)),
        E("bborel_ML", "B-Borel transform maps exp(x) to a Mittag-Leffler function", "series-partial-sum",
          TOL_EXACT, _bborel_ml_series, lambda p: sf.mittag_leffler(1.0, p["beta"] + 1, p["x"]),
          grid=_grid(beta=(0.5, 1.0, 2.5), x=(0.5, -2.0)), tags=("borel", "mittag")),
        E("ML_gaussianlike", "line integral of E_(1, beta+1)(-x^2)", "quadrature", TOL_QUAD,
          _ml_gaussian_quad, lambda p: gen.mittag_leffler_gaussian_integral(p["beta"]),
          grid=_grid(beta=(0.5, 1.0)), domain=lambda p: None if p["beta"] > 0 else "need beta > 0",
          tags=("mittag",)),
        # Hermite family
        E("doetsch", "even-index lacunary Hermite generating function", "series-partial-sum", TOL_PARTIAL,
          _doetsch_partial, lambda p: gen.doetsch(p["x"], p["y"], p["t"]),
          grid=({"x": 0.5, "y": 0.3, "t": 0.0}, {"x": 0.5, "y": 0.3, "t": 0.4}, {"x": 1.0, "y": -0.8, "t": 0.15}),
          sampler=_doetsch_sampler, domain=_doetsch_domain, tags=("hermite",)),
        E("doetsch_general", "Doetsch rule for H_{2n+l}, H_l(x/d, y/d) form", "series-partial-sum",
          TOL_PARTIAL, _doetsch_general_partial,
          lambda p: gen.doetsch_general(p["l"], p["x"], p["y"], p["t"]),
          grid=_grid(l=(1, 2), x=(0.5,), y=(0.3,), t=(0.4, -0.3)), sampler=_doetsch_general_sampler,
          domain=_doetsch_domain, tags=("hermite",)),
        E("doetsch_general_scaled", "Doetsch rule for H_{2n+l}, H_l(x/sqrt d, y) form", "series-partial-sum",
          TOL_PARTIAL, _doetsch_general_partial,
          lambda p: gen.doetsch_general_scaled(p["l"], p["x"], p["y"], p["t"]),
          grid=_grid(l=(1, 2), x=(0.5,), y=(0.3,), t=(0.4, -0.3)), sampler=_doetsch_general_sampler,
          domain=_doetsch_domain, tags=("hermite",)),
        E("hermite_gf", "generating function of two-variable Hermite polynomials", "series-partial-sum",
          TOL_PARTIAL, _hermite_gf_partial, lambda p: gen.hermite_gf(p["x"], p["y"], p["t"]),
          grid=({"x": 0.5, "y": 0.3, "t": 0.7}, {"x": -1.0, "y": -0.5, "t": 1.2}),
          sampler=lambda rng: dict(zip(("x", "y", "t"), (float(v) for v in rng.uniform(-1, 1, 3)))),
          tags=("hermite",)),
        E("hermite3_gf", "generating function of third-order Hermite polynomials", "series-partial-sum",
          TOL_EXACT, _hermite3_gf_partial, lambda p: gen.hermite3_gf(p["x"], p["y"], p["z"], p["t"]),
          grid=({"x": 0.3, "y": 0.2, "z": 0.1, "t": 0.4},), tags=("hermite",)),
        E("hermite_m_operational", "H^(m)_n as exp(y D^m) x^n on dense polynomials", "polynomial-expansion",
          1e-12, lambda p: sf.hermite_m(p["m"], p["n"], p["x"], p["y"]), _hermite_m_operational,
          grid=_grid(m=(1, 2, 3, 4), n=tuple(range(11)), x=(0.7,), y=(-0.4,)), tags=("hermite",)),
        E("hermite_boundary", "H_n(0, y) through the Gamma/|cos| vacuum weight", "two-route", TOL_EXACT,
          lambda p: sf.hermite2(p["n"], 0.0, p["y"]), _hermite_vacuum_formula,
          grid=_grid(n=tuple(range(9)), y=(0.3, 1.7)), tags=("hermite",)),
        E("umbral_h_exp", "exp(h z) on the Hermite vacuum is exp(y z^2)", "series-partial-sum", TOL_PARTIAL,
          _umbral_h_exp_sum, lambda p: gen.umbral_h_exp(p["y"], p["z"]),
          grid=({"y": 0.3, "z": 0.8}, {"y": -0.7, "z": 1.1}), tags=("hermite", "umbral")),
        E("umbral_h_sq", "exp(h^2 z) on the Hermite vacuum is (1 - 4yz)^(-1/2)", "series-partial-sum",
          TOL_PARTIAL, _umbral_h_sq_sum, lambda p: gen.umbral_h_square_exp(p["y"], p["z"]),
          grid=({"y": 0.3, "z": 0.4}, {"y": -0.5, "z": 0.25}),
          domain=lambda p: None if abs(4 * p["y"] * p["z"]) < 1 else "need |z| < 1/(4|y|)",
          tags=("hermite", "umbral")),
        E("umbral_h_shift", "exp(h^2 t + 2 h x t) on the Hermite vacuum", "series-partial-sum", TOL_PARTIAL,
          _umbral_h_shift_sum, lambda p: gen.hermite_exponential_shift(p["x"], p["y"], p["t"]),
          grid=({"x": 0.5, "y": 0.3, "t": 0.3}, {"x": -0.8, "y": 0.6, "t": -0.2}),
          domain=_doetsch_domain, tags=("hermite", "umbral")),
        E("doetsch_reexpansion", "Doetsch sum re-expanded in the Hermite umbra", "two-route", TOL_PARTIAL,
          lambda p: gen.doetsch_reexpansion(p["x"], p["y"], p["t"]),
          lambda p: gen.doetsch(p["x"], p["y"], p["t"]),
          grid=({"x": 0.5, "y": 0.3, "t": 0.4}, {"x": 1.0, "y": -0.8, "t": 0.15}),
          sampler=_doetsch_sampler, domain=_doetsch_domain, tags=("hermite", "umbral")),
        E("triple_lacunary", "triple lacunary Hermite sum through third-order Hermite polynomials",
          "two-route", TOL_QUAD, _triple_lacunary_lhs,
          lambda p: gen.triple_lacunary_series(p["x"], p["y"], p["t"], 30),
          grid=({"x": 0.3, "y": 0.2, "t": 0.1},),
          # the left series has zero radius of convergence; the two truncations
          # only track each other for small |y|^(3/2) |t|
          sampler=lambda rng: {"x": float(rng.uniform(-0.4, 0.4)), "y": float(rng.uniform(-0.2, 0.2)),
                               "t": float(rng.uniform(-0.1, 0.1))}, tags=("hermite",)),
        E("assoc_index_dup", "index duplication through associated Hermite polynomials",
          "polynomial-expansion", TOL_EXACT, _assoc_index_dup, lambda p: sf.hermite2(2 * p["n"], p["x"], p["y"]),
          grid=_grid(n=tuple(range(7)), x=(0.5,), y=(0.3,)), sampler=_poly_point_sampler(),
          tags=("hermite", "associated")),
        E("assoc_arg_dup", "argument duplication through associated Hermite polynomials",
          "polynomial-expansion", TOL_EXACT, _assoc_arg_dup, lambda p: sf.hermite2(p["n"], 2 * p["x"], p["y"]),
          grid=_grid(n=tuple(range(7)), x=(0.5,), y=(0.3,)), sampler=_poly_point_sampler(),
          tags=("hermite", "associated")),
        E("assoc_xn", "x^n expanded over associated Hermite polynomials", "polynomial-expansion", TOL_EXACT,
          _assoc_xn, lambda p: p["x"] ** p["n"], grid=_grid(n=tuple(range(7)), x=(0.5,), y=(0.3,)),
          sampler=_poly_point_sampler(), tags=("hermite", "associated")),
        E("nielsen", "H_{n+m} as a sum of associated Hermite polynomials", "polynomial-expansion", TOL_EXACT,
          _nielsen, lambda p: sf.hermite2(p["n"] + p["m"], p["x"], p["y"]),
          grid=_grid(n=tuple(range(7)), m=tuple(range(7)), x=(0.5,), y=(0.3,)),
          sampler=_poly_point_sampler(with_m=True), tags=("hermite", "associated")),
        E("gen_assoc_gf", "generating function of generalized associated Hermite polynomials",
          "series-partial-sum", TOL_PARTIAL, _gen_assoc_partial,
          lambda p: gen.generalized_assoc_hermite_gf(p["x"], p["y"], p["t"], p["beta"], p["alpha"]),
          grid=({"x": 0.4, "y": 0.9, "t": 0.1, "alpha": 2.0, "beta": 0.0},
                {"x": 0.4, "y": 0.9, "t": 0.3, "alpha": 1.0, "beta": 0.0},
                {"x": 0.4, "y": 0.9, "t": 0.3, "alpha": 1.0, "beta": 2.0},
                {"x": 0.4, "y": 0.9, "t": 0.2, "alpha": 2.0, "beta": 1.0}),
          domain=lambda p: None if p["y"] >= 0 and (p["alpha"] < 2 or abs(4 * p["y"] * p["t"]) < 1)
          else "outside the convergence region of the generating series",
          tags=("hermite", "associated")),
        E("bilateral_gf", "bilateral Hermite generating function", "series-partial-sum", TOL_PARTIAL,
          _bilateral_partial, lambda p: gen.bilateral_hermite_gf(p["x"], p["y"], p["z"], p["w"], p["t"]),
          grid=({"x": 0.5, "y": 0.3, "z": -0.4, "w": 0.6, "t": 0.5},
                {"x": 1.0, "y": -0.5, "z": 0.7, "w": 0.4, "t": 0.7}),
          sampler=_bilateral_sampler,
          domain=lambda p: None if abs(4 * p["w"] * p["t"] ** 2 * p["y"]) < 1 else "need |4 w t^2 y| < 1",
          tags=("hermite",)),
        E("quartic_gaussian", "quartic Gaussian integral: z-route against s-route", "two-route", TOL_QUAD,
          _quartic_z_route, lambda p: sf.quartic_gaussian_integral(p["x"], p["y"]),
          grid=({"x": 1.0, "y": 1.0}, {"x": 0.5, "y": 2.0}),
          domain=lambda p: None if p["y"] > 0 or (p["y"] == 0 and p["x"] > 0) else "need y > 0",
          tags=("hermite", "quartic")),
        E("quartic_gaussian_pcf", "quartic Gaussian integral through D_{-1/2}", "two-route", TOL_QUAD,
          lambda p: sf.quartic_gaussian_pcf(p["x"], p["y"]), lambda p: sf.quartic_gaussian_integral(p["x"], p["y"]),
          grid=({"x": 1.0, "y": 1.0}, {"x": 0.5, "y": 2.0}, {"x": -0.5, "y": 0.7}),
          domain=lambda p: None if p["y"] > 0 else "need y > 0", tags=("hermite", "quartic")),
        E("hermite_umbral_negative_power", "negative half power of the Hermite umbra against the z-route",
          "two-route", TOL_QUAD,
          lambda p: math.sqrt(math.pi) * ops.hermite_umbral_negative_power(p["x"], p["y"], 0.5),
          _quartic_z_route, grid=({"x": 1.0, "y": 1.0}, {"x": 0.5, "y": 2.0}), tags=("hermite", "quartic")),
        # heat polynomials
        E("heat_gf_exp", "exponential generating function of generalized heat polynomials",
          "series-partial-sum", TOL_PARTIAL, _heat_exp_partial,
          lambda p: gen.heat_gf_exp(p["nu"], p["x"], p["y"], p["t"]),
          grid=_grid(nu=(0.5, 1.5), x=(0.7,), y=(0.4,), t=(0.5, -0.8)), tags=("heat",)),
        E("heat_gf_geom", "ordinary generating function of generalized heat polynomials",
          "series-partial-sum", TOL_PARTIAL, _heat_geom_partial,
          lambda p: gen.heat_gf_geom(p["nu"], p["x"], p["y"], p["t"]),
          grid=_grid(nu=(0.5, 1.5), x=(0.7,), y=(0.4,), t=(0.3, -0.25)),
          domain=lambda p: None if abs(4 * p["y"] * p["t"]) < 1 else "need |4yt| < 1", tags=("heat",)),
        E("heat_reduction_half", "P_{n,1/2}(x, y) = L_n(-x^2, 4y)", "polynomial-expansion", TOL_EXACT,
          lambda p: sf.heat_poly(p["n"], 0.5, p["x"], p["y"]), _heat_half_rhs,
          grid=_grid(n=tuple(range(7)), x=(0.7,), y=(0.4,)), sampler=_poly_point_sampler(), tags=("heat",)),
        E("heat_reduction_zero", "P_{n,0}(x, y) = 4^n n!/(2n)! H_{2n}(x, y)", "polynomial-expansion",
          TOL_EXACT, lambda p: sf.heat_poly(p["n"], 0.0, p["x"], p["y"]), _heat_zero_rhs,
          grid=_grid(n=tuple(range(7)), x=(0.7,), y=(0.4,)), sampler=_poly_point_sampler(), tags=("heat",)),
        E("heat_equation", "H_n(x, y) solves the heat equation", "finite-difference", TOL_PDE,
          _heat_eq_dy, _heat_eq_dxx, grid=_grid(n=tuple(range(9)), x=(0.6,), y=(0.35,)),
          sampler=_pde_sampler(False), tags=("hermite", "pde")),
        E("ghp_pde", "P_{n,nu} solves the radial heat equation", "finite-difference", TOL_PDE,
          _ghp_dy, _ghp_radial, grid=_grid(n=tuple(range(7)), nu=(0.25, 1.5), x=(0.8,), y=(0.3,)),
          sampler=_pde_sampler(True), tags=("heat", "pde")),
        E("ghp_complementary", "P_{n,nu} and the Laguerre-derivative form of the radial operator",
          "finite-difference", TOL_PDE, _ghp_dy, _ghp_laguerre_derivative,
          grid=_grid(n=tuple(range(7)), nu=(0.25, 1.5), x=(0.8,), y=(0.3,)),
          sampler=_pde_sampler(True), tags=("heat", "pde")),
        # negative-derivative integration
        E("gaussian_exp_integral", "integral of exp(a x^2 + b x) by the negative-derivative series",
          "quadrature", TOL_QUAD, lambda p: ops.gaussian_exp_integral(p["x"], p["a"], p["b"]),
          _gaussian_exp_quad, grid=_grid(a=(-0.5,), b=(0.3,), x=(0.5, 1.0, 1.5)), tags=("integral",)),
        E("gaussian_cos_integral", "integral of exp(a x^2 + b x) cos x through F_n", "quadrature", TOL_QUAD,
          lambda p: ops.gaussian_cos_integral(p["x"], p["a"], p["b"]), _gaussian_cos_quad,
          grid=_grid(a=(-0.5,), b=(0.3,), x=(0.5, 1.0, 1.5)), tags=("integral",)),
        E("hermite_integral_x", "primitive in x of H_n(x, y)", "polynomial-expansion", TOL_EXACT,
          lambda p: ops.hermite_integral_x(p["n"], p["x"], p["y"]), _hermite_integral_x_poly,
          grid=_grid(n=tuple(range(7)), x=(0.8,), y=(0.3,)), sampler=_poly_point_sampler(),
          tags=("hermite", "integral")),
        E("hermite_integral_y", "primitive in y of H_n(x, y)", "quadrature", TOL_QUAD,
          lambda p: ops.hermite_integral_y(p["n"], p["x"], p["y"]), _hermite_integral_y_quad,
          grid=_grid(n=tuple(range(7)), x=(0.8,), y=(0.3,)), sampler=_poly_point_sampler(),
          tags=("hermite", "integral")),
        E("hermite_cos_integral_x", "integral of H_n(x, y) cos x including the truncated-exponential term",
          "quadrature", TOL_QUAD, lambda p: ops.hermite_cos_integral_x(p["n"], p["x"], p["y"]), _hermite_cos_quad,
          grid=_grid(n=tuple(range(5)), x=(1.3,), y=(0.4,)),
          sampler=lambda rng: {"n": int(rng.integers(0, 5)), "x": float(rng.uniform(-2, 2)),
                               "y": float(rng.uniform(-1, 1))}, tags=("hermite", "integral")),
        E("trinomial_derivative", "m-th derivative of a trinomial power", "polynomial-expansion", TOL_EXACT,
          lambda p: ops.trinomial_derivative(p["m"], p["n"], p["a"], p["b"], p["c"], p["x"]), _trinomial_poly,
          grid=_grid(m=tuple(range(5)), n=tuple(range(7)), a=(1.0,), b=(2.0,), c=(1.0,), x=(0.7,)),
          sampler=_trinomial_sampler, tags=("polynomial",)),
        E("hermite_product_integral", "primitive of H_n H_m", "polynomial-expansion", TOL_EXACT,
          _hermite_product_closed, _hermite_product_poly,
          grid=_grid(n=tuple(range(5)), m=tuple(range(5)), x=(0.8,), y=(0.3,)), tags=("hermite", "integral")),
        E("hermite_product_power", "primitive of H_n H_m x^p vanishing at 0", "polynomial-expansion", TOL_EXACT,
          lambda p: ops.hermite_product_power_integral(p["n"], p["m"], p["p"], p["x"], p["y"]),
          _hermite_product_power_poly,
          grid=_grid(n=tuple(range(5)), m=tuple(range(5)), p=tuple(range(5)), x=(0.8,), y=(0.3,)),
          tags=("hermite", "integral")),
        E("gauss_weierstrass_hermite", "Gauss-Weierstrass transform of x^n is H_n(x, y)", "quadrature",
          TOL_PARTIAL, lambda p: ops.gauss_weierstrass(lambda s: s ** p["n"], p["x"], p["y"]),
          lambda p: sf.hermite2(p["n"], p["x"], p["y"]), grid=_grid(n=(0, 1, 3, 5), x=(0.5,), y=(0.2,)),
          domain=lambda p: None if p["y"] > 0 else "need y > 0", tags=("hermite",)),
        # complex-branch forms are recorded but not evaluated
        E("complex_hermite_cos_integral_y", "y-directed Hermite-cos integral with (-1)^(1/4) factors",
          "quadrature", TOL_QUAD, None, None,
          skipped_reason="complex branch of (-1)^(1/4) is unstated; not implemented", tags=("complex",)),
        E("complex_tricomi_incomplete_gamma", "C_s through gamma(s, -ix)", "two-route", TOL_QUAD, None, None,
          skipped_reason="needs gamma(s, -ix) on an unstated branch; not implemented", tags=("complex",)),
    ]
    registry: dict[str, IdentityEntry] = {}
    for e in entries:
        if e.id in registry:
            raise ValueError(f"duplicate identity id {e.id}")
        registry[e.id] = e
    return registry


REGISTRY: dict[str, IdentityEntry] = _build_registry()


def identity_ids() -> list[str]:
    return list(REGISTRY)


def get_entry(identity_id: str) -> IdentityEntry:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def run_identity(identity_id: str, point: Optional[Point] = None,
                 tol_override: Optional[float] = None) -> IdentityReport:
    """Evaluate one identity at one point (the entry's first grid point by default)."""
    entry = get_entry(identity_id)
    tol = entry.tol if tol_override is None else tol_override
    p = entry.default_point() if point is None else dict(point)
    if entry.skipped_reason is not None:
        return IdentityReport(entry.id, p, None, None, None, None, tol, "skipped", reason=entry.skipped_reason)
    if entry.domain is not None:
        why = entry.domain(p)
        if why is not None:
            return IdentityReport(entry.id, p, None, None, None, None, tol, "skipped", reason=why)
    start = time.perf_counter()
    try:
        lhs = float(entry.lhs(p))
        rhs = float(entry.rhs(p))
    except (DomainError, PoleError) as exc:
        return IdentityReport(entry.id, p, None, None, None, None, tol, "skipped",
                              time.perf_counter() - start, reason=str(exc))
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        return IdentityReport(entry.id, p, None, None, None, None, tol, "fail",
                              time.perf_counter() - start, reason=f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        return IdentityReport(entry.id, p, None, None, None, None, tol, "fail", elapsed,
                              reason="non-finite evaluation")
    abs_err, rel_err = _errors(lhs, rhs)
    status = "pass" if abs_err <= tol or rel_err <= tol else "fail"
    return IdentityReport(entry.id, p, lhs, rhs, abs_err, rel_err, tol, status, elapsed)


def select(pattern: Optional[str] = None) -> list[IdentityEntry]:
    """Entries whose id or a tag matches a glob; comma-separated patterns are OR-ed."""
    if not pattern:
        return list(REGISTRY.values())
    pats = [s.strip() for s in pattern.split(",") if s.strip()]
    return [e for e in REGISTRY.values()
            if any(fnmatch.fnmatchcase(e.id, q) or any(fnmatch.fnmatchcase(t, q) for t in e.tags)
                   for q in pats)]


def points_for(entry: IdentityEntry, count: Optional[int], seed: int = 0) -> list[Point]:
    """Deterministic evaluation points: the grid first, then sampled or cycled points."""
    if entry.skipped_reason is not None:
        return [{}] * (count or 1)
    grid = [dict(p) for p in entry.grid]
    if count is None:
        return grid
    if count <= len(grid):
        return grid[:count]
    extra = count - len(grid)
    if entry.sampler is None:
        return grid + [dict(grid[k % len(grid)]) for k in range(extra)]
    rng = np.random.default_rng([seed, zlib.crc32(entry.id.encode())])
    return grid + [entry.sampler(rng) for _ in range(extra)]


def run_all(pattern: Optional[str] = None, points_per_identity: Optional[int] = None, seed: int = 0,
            tol_override: Optional[float] = None, workers: int = 1) -> list[IdentityReport]:
    """Run every matching entry; reports come back in registry order.

    With ``points_per_identity`` None each entry runs over its full grid.
    """
    jobs = [(e.id, p) for e in select(pattern) for p in points_for(e, points_per_identity, seed)]

    def run(job: tuple[str, Point]) -> IdentityReport:
        return run_identity(job[0], job[1], tol_override)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, jobs))
    return [run(j) for j in jobs]


def summarize(reports: Iterable[IdentityReport]) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        out[r.status] += 1
    return out


def reports_to_json(reports: Sequence[IdentityReport], include_timings: bool = False) -> str:
    return json.dumps([r.as_record(include_timings) for r in reports], indent=2, allow_nan=False) + "\n"


def reports_to_csv(reports: Sequence[IdentityReport], include_timings: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(IdentityReport.FIELDS)
    for r in reports:
        rec = r.as_record(include_timings)
        rec["point"] = json.dumps(rec["point"], sort_keys=False)
        w.writerow(["" if rec[k] is None else (repr(rec[k]) if isinstance(rec[k], float) else rec[k])
                    for k in IdentityReport.FIELDS])
    return buf.getvalue()


def reports_to_text(reports: Sequence[IdentityReport]) -> str:
    lines = []
    for r in reports:
        pt = ", ".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in r.point.items())
        if r.status == "skipped" or r.lhs is None:
            lines.append(f"{r.status.upper():7s} {r.id}({pt}): {r.reason}")
        else:
            lines.append(f"{r.status.upper():7s} {r.id}({pt}): lhs={r.lhs:.15g} rhs={r.rhs:.15g} "
                         f"abs={r.abs_err:.2e} rel={r.rel_err:.2e} tol={r.tol:.0e}")
    s = summarize(reports)
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"
