"""Independent numerical oracles: quadrature, finite differences and dense
polynomial arithmetic.

Nothing here knows about umbral weights or Borel factors. The catalog
uses these routines to check closed forms by a route that shares no code
with the closed forms themselves.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

MAX_EVALUATIONS = 2_000_000
MAX_DEGREE = 64

# 15-point Gauss-Kronrod rule with its embedded 7-point Gauss rule.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate((-_XGK[:-1], _XGK[::-1]))
_KWEIGHTS = np.concatenate((_WGK[:-1], _WGK[::-1]))
# Gauss nodes sit at the odd positions of the Kronrod abscissae.
_GWEIGHTS = np.zeros(15)
_GWEIGHTS[[1, 3, 5, 7, 9, 11, 13]] = [_WG[0], _WG[1], _WG[2], _WG[3], _WG[2], _WG[1], _WG[0]]


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_err_estimate: float
    evaluations: int
    converged: bool

    def __float__(self) -> float:
        return self.value


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fx = np.array([f(mid + half * t) for t in _NODES], dtype=float)
    k = half * float(np.dot(_KWEIGHTS, fx))
    g = half * float(np.dot(_GWEIGHTS, fx))
    return k, abs(k - g)


def integrate_finite(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10,
                     rtol: float = 0.0, max_evaluations: int = MAX_EVALUATIONS) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod quadrature over [a, b] (oriented, so b < a flips the sign).

    The interval with the largest error estimate is bisected until the
    summed estimate drops below ``max(tol, rtol*|value|)`` or the
    evaluation budget runs out.
    """
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, True)
    if a > b:
        r = integrate_finite(f, b, a, tol, rtol, max_evaluations)
        return QuadratureResult(-r.value, r.abs_err_estimate, r.evaluations, r.converged)
    val, err = _gk15(f, a, b)
    evals = 15
    heap = [(-err, a, b, val, err)]
    total, total_err = val, err
    while total_err > max(tol, rtol * abs(total)):
        if evals + 30 > max_evaluations:
            return QuadratureResult(total, total_err, evals, False)
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # Interval cannot be split any further in floating point.
            heapq.heappush(heap, (0.0, lo, hi, v, e))
            return QuadratureResult(total, total_err, evals, total_err <= max(tol, rtol * abs(total)))
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        evals += 30
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
        # Re-summing avoids drift from repeated add/subtract updates.
        total = math.fsum(item[3] for item in heap)
        total_err = math.fsum(item[4] for item in heap)
    return QuadratureResult(total, total_err, evals, True)


def integrate_halfline_decaying(f: Callable[[float], float], tol: float = 1e-10, a: float = 0.0,
                                rtol: float = 0.0,
                                max_evaluations: int = MAX_EVALUATIONS) -> QuadratureResult:
    """Integral of f over [a, inf) through the map x = a + t/(1-t)."""
    def g(t: float) -> float:
        if t >= 1.0:
            return 0.0
        s = 1.0 - t
        return f(a + t / s) / (s * s)
    return integrate_finite(g, 0.0, 1.0, tol, rtol, max_evaluations)


def integrate_line_decaying(f: Callable[[float], float], tol: float = 1e-10,
                            rtol: float = 0.0) -> QuadratureResult:
    """Integral of f over the whole real line, split at the origin."""
    right = integrate_halfline_decaying(f, tol / 2, 0.0, rtol)
    left = integrate_halfline_decaying(lambda x: f(-x), tol / 2, 0.0, rtol)
    return QuadratureResult(right.value + left.value,
                            right.abs_err_estimate + left.abs_err_estimate,
                            right.evaluations + left.evaluations,
                            right.converged and left.converged)


def bisect_root(f: Callable[[float], float], lo: float, hi: float, xtol: float = 1e-14,
                max_iter: int = 200) -> float:
    """Sign-change root of f in [lo, hi] by plain bisection."""
    flo = f(lo)
    if flo == 0.0:
        return lo
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0 or hi - lo < xtol * max(1.0, abs(mid)):
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sign_change_points(f: Callable[[float], float], a: float, count: int,
                       step: float = 0.25, max_scan: float = 1e6) -> list[float]:
    """First ``count`` sign changes of f to the right of a."""
    points: list[float] = []
    x = a
    fx = f(x)
    while len(points) < count:
        if x - a > max_scan:
            raise RuntimeError("ran out of scan range while locating sign changes")
        xn = x + step
        fn = f(xn)
        if fx == 0.0 and x > a:
            points.append(x)
        elif fx * fn < 0:
            points.append(bisect_root(f, x, xn))
        x, fx = xn, fn
    return points


def euler_accelerate(partial_sums: Sequence[float]) -> tuple[float, float]:
    """Iterated averaging of partial sums of an alternating series.

    Returns the accelerated value and the change caused by dropping the
    last partial sum, which serves as the error estimate.
    """
    def top(values: Sequence[float]) -> float:
        level = list(values)
        while len(level) > 1:
            level = [0.5 * (p + q) for p, q in zip(level, level[1:])]
        return level[0]

    if len(partial_sums) < 3:
        raise ValueError("need at least three partial sums to accelerate")
    best = top(partial_sums)
    previous = top(partial_sums[:-1])
    return best, abs(best - previous)


def integrate_halfline_oscillatory(f: Callable[[float], float], tol: float = 1e-6, a: float = 0.0,
                                   zeros: Optional[Callable[[int], float]] = None,
                                   scan_step: float = 0.25, max_lobes: int = 40,
                                   lobe_tol: Optional[float] = None) -> QuadratureResult:
    """Conditionally convergent integral over [a, inf).

    The range is cut into lobes between consecutive zeros: ``zeros(k)``
    supplies the k-th cut point if given, otherwise the sign changes of f
    are located by scanning and bisection. Lobe integrals are summed and
    the partial sums accelerated by iterated Euler averaging.
    """
    if zeros is None:
        cuts = sign_change_points(f, a, max_lobes + 1, scan_step)
    else:
        cuts = [zeros(k) for k in range(max_lobes + 1)]
        cuts = [c for c in cuts if c > a]
    if lobe_tol is None:
        lobe_tol = tol * 1e-3
    head = integrate_finite(f, a, cuts[0], lobe_tol)
    evals = head.evaluations
    ok = head.converged
    partial = []
    running = head.value
    for lo, hi in zip(cuts, cuts[1:]):
        lobe = integrate_finite(f, lo, hi, lobe_tol)
        evals += lobe.evaluations
        ok = ok and lobe.converged
        running += lobe.value
        partial.append(running)
    value, err = euler_accelerate(partial)
    return QuadratureResult(value, err, evals, ok and err <= tol)


def finite_difference(f: Callable[[float], float], x: float, order: int = 1,
                      h: Optional[float] = None) -> float:
    """Central-difference derivative of order 1..4, Richardson-extrapolated once."""
    if order not in (1, 2, 3, 4):
        raise ValueError("finite_difference supports orders 1 to 4")
    if h is None:
        h = (1e-2 if order <= 2 else 5e-2) * max(1.0, abs(x))

    def stencil(step: float) -> float:
        if order == 1:
            return (f(x + step) - f(x - step)) / (2 * step)
        if order == 2:
            return (f(x + step) - 2 * f(x) + f(x - step)) / step ** 2
        if order == 3:
            return (f(x + 2 * step) - 2 * f(x + step) + 2 * f(x - step) - f(x - 2 * step)) / (2 * step ** 3)
        return (f(x + 2 * step) - 4 * f(x + step) + 6 * f(x) - 4 * f(x - step) + f(x - 2 * step)) / step ** 4

    coarse = stencil(h)
    fine = stencil(h / 2)
    return (4.0 * fine - coarse) / 3.0


class DegreeOverflowError(ValueError):
    pass


@dataclass(frozen=True)
class DensePolynomial:
    """Polynomial in one variable, coefficients in ascending powers."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.atleast_1d(np.array(self.coeffs, dtype=float))
        nz = np.nonzero(c)[0]
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1)
        if c.size - 1 > MAX_DEGREE:
            raise DegreeOverflowError(f"degree {c.size - 1} exceeds the limit {MAX_DEGREE}")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, x: float) -> float:
        return poly_eval(self, x)

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        return poly_add(self, other)

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            return poly_mul(self, other)
        return DensePolynomial(self.coeffs * float(other))

    __rmul__ = __mul__

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        return poly_add(self, other * -1.0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())


def monomial(n: int) -> DensePolynomial:
    c = np.zeros(n + 1)
    c[n] = 1.0
    return DensePolynomial(c)


def poly_add(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    n = max(p.coeffs.size, q.coeffs.size)
    out = np.zeros(n)
    out[: p.coeffs.size] += p.coeffs
    out[: q.coeffs.size] += q.coeffs
    return DensePolynomial(out)


def poly_mul(p: DensePolynomial, q: DensePolynomial) -> DensePolynomial:
    if p.degree + q.degree > MAX_DEGREE:
        raise DegreeOverflowError(f"product degree {p.degree + q.degree} exceeds {MAX_DEGREE}")
    return DensePolynomial(np.convolve(p.coeffs, q.coeffs))


def poly_pow(p: DensePolynomial, n: int) -> DensePolynomial:
    if n < 0:
        raise ValueError("poly_pow needs a non-negative exponent")
    if p.degree * n > MAX_DEGREE:
        raise DegreeOverflowError(f"power degree {p.degree * n} exceeds {MAX_DEGREE}")
    out = DensePolynomial([1.0])
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def poly_derivative(p: DensePolynomial, times: int = 1) -> DensePolynomial:
    c = p.coeffs
    for _ in range(times):
        if c.size == 1:
            return DensePolynomial([0.0])
        c = c[1:] * np.arange(1, c.size, dtype=float)
    return DensePolynomial(c)


def poly_antiderivative(p: DensePolynomial) -> DensePolynomial:
    """Primitive vanishing at 0."""
    k = np.arange(1, p.coeffs.size + 1, dtype=float)
    return DensePolynomial(np.concatenate(([0.0], p.coeffs / k)))


def poly_eval(p: DensePolynomial, x: float) -> float:
    acc = 0.0
    for c in p.coeffs[::-1]:
        acc = acc * x + c
    return float(acc)


def poly_compose_affine(p: DensePolynomial, scale: float, shift: float) -> DensePolynomial:
    """p(scale*x + shift) as a dense polynomial."""
    lin = DensePolynomial([shift, scale])
    out = DensePolynomial([0.0])
    power = DensePolynomial([1.0])
    for c in p.coeffs:
        out = poly_add(out, power * c)
        power = poly_mul(power, lin) if power.degree < p.degree else power
    return out
