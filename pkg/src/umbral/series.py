"""Truncated power series and the Gamma/Beta scalar kernel.

Everything in the package that manipulates a formal expansion
``f(x) = sum_r c_r x^r`` goes through :class:`TruncatedPowerSeries`.
Series are immutable; arithmetic returns new objects and never touches
coefficients past the order of the operands.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

DEFAULT_ORDER = 40

_POLE_EPS = 1e-12


class PoleError(ValueError):
    """Raised when a Gamma-type function is evaluated at one of its poles."""


def default_order() -> int:
    """Truncation order used when the caller does not pass one.

    ``UMBRAL_ORDER`` in the environment overrides the built-in value of 40.
    """
    raw = os.environ.get("UMBRAL_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    order = int(raw)
    if order < 0:
        raise ValueError(f"UMBRAL_ORDER must be non-negative, got {order}")
    return order


def is_gamma_pole(x: float) -> bool:
    return x <= 0 and abs(x - round(x)) < _POLE_EPS


def gamma(x: float) -> float:
    """Gamma function for real arguments.

    Raises :class:`PoleError` at 0, -1, -2, ...
    """
    x = float(x)
    if is_gamma_pole(x):
        raise PoleError(f"Gamma has a pole at x = {x}")
    if x > 0 and x == int(x) and x < 171:
        return float(math.factorial(int(x) - 1))
    return math.gamma(x)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x), an entire function: exactly zero at the poles of Gamma."""
    x = float(x)
    if is_gamma_pole(x):
        return 0.0
    if x > 171.6:
        return 0.0
    return 1.0 / gamma(x)


def log_abs_gamma(x: float) -> tuple[float, float]:
    """Return ``(log|Gamma(x)|, sign(Gamma(x)))``."""
    x = float(x)
    if is_gamma_pole(x):
        raise PoleError(f"Gamma has a pole at x = {x}")
    if x > 0:
        return math.lgamma(x), 1.0
    # For x < 0 the sign alternates between consecutive poles.
    sign = -1.0 if math.floor(x) % 2 else 1.0
    return math.lgamma(x), sign


def beta(a: float, b: float) -> float:
    """Euler Beta function Gamma(a) Gamma(b) / Gamma(a + b)."""
    if is_gamma_pole(a) or is_gamma_pole(b):
        raise PoleError(f"Beta has a pole at ({a}, {b})")
    if is_gamma_pole(a + b):
        return 0.0
    if max(a, b, a + b) < 170:
        return gamma(a) * gamma(b) / gamma(a + b)
    la, sa = log_abs_gamma(a)
    lb, sb = log_abs_gamma(b)
    lab, sab = log_abs_gamma(a + b)
    return sa * sb * sab * math.exp(la + lb - lab)


def pochhammer(a: float, r: int) -> float:
    """Rising factorial (a)_r."""
    out = 1.0
    for k in range(r):
        out *= a + k
    return out


@dataclass(frozen=True)
class ConvergenceFlag:
    """Outcome of a tail inspection.

    ``status`` is one of ``converged``, ``conditionally-convergent``,
    ``divergent`` or ``undetermined``; ``witness`` is the last
    inspected coefficient ratio.
    """

    status: str
    witness: Optional[float] = None

    STATUSES = ("converged", "conditionally-convergent", "divergent", "undetermined")

    def __post_init__(self) -> None:
        if self.status not in self.STATUSES:
            raise ValueError(f"unknown convergence status {self.status!r}")
        if self.status == "divergent" and not (self.witness is not None and self.witness > 1):
            raise ValueError("a divergent flag needs a witness ratio > 1")


@dataclass(frozen=True)
class TruncatedPowerSeries:
    """Coefficients c_0..c_N of a formal series about 0."""

    coeffs: np.ndarray
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        c = np.array(self.coeffs, dtype=float).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, k: int) -> float:
        return float(self.coeffs[k])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())

    def __add__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        return series_add(self, other)

    def __mul__(self, other):
        if isinstance(other, TruncatedPowerSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "TruncatedPowerSeries":
        return series_scale(self, -1.0)

    def __sub__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        return series_add(self, series_scale(other, -1.0))

    def __call__(self, x: float) -> float:
        return series_eval(self, x)

    def truncate(self, order: int) -> "TruncatedPowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedPowerSeries(self.coeffs[: order + 1], self.label)

    def relabel(self, label: Optional[str]) -> "TruncatedPowerSeries":
        return TruncatedPowerSeries(self.coeffs, label)

    def __repr__(self) -> str:
        name = f"{self.label!r}, " if self.label else ""
        return f"TruncatedPowerSeries({name}order={self.order})"


def series_from_terms(term: Callable[[int], float], order: Optional[int] = None,
                      label: Optional[str] = None) -> TruncatedPowerSeries:
    """Build a series from a coefficient rule ``r -> c_r``."""
    if order is None:
        order = default_order()
    return TruncatedPowerSeries(np.array([term(r) for r in range(order + 1)], dtype=float), label)


def series_add(a: TruncatedPowerSeries, b: TruncatedPowerSeries) -> TruncatedPowerSeries:
    n = min(a.order, b.order)
    return TruncatedPowerSeries(a.coeffs[: n + 1] + b.coeffs[: n + 1])


def series_scale(a: TruncatedPowerSeries, s: float) -> TruncatedPowerSeries:
    return TruncatedPowerSeries(a.coeffs * float(s))


def series_mul(a: TruncatedPowerSeries, b: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Cauchy product truncated at min(order(a), order(b))."""
    n = min(a.order, b.order)
    ca, cb = a.coeffs[: n + 1], b.coeffs[: n + 1]
    out = np.empty(n + 1)
    for k in range(n + 1):
        out[k] = float(np.dot(ca[: k + 1], cb[k::-1]))
    return TruncatedPowerSeries(out)


def series_eval(f: TruncatedPowerSeries, x: float) -> float:
    """Horner evaluation of the truncation at ``x``."""
    acc = 0.0
    for c in f.coeffs[::-1]:
        acc = acc * x + c
    return float(acc)


def series_derivative(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    if f.order == 0:
        return TruncatedPowerSeries([0.0])
    k = np.arange(1, f.order + 1, dtype=float)
    return TruncatedPowerSeries(f.coeffs[1:] * k)


def series_antiderivative(f: TruncatedPowerSeries) -> TruncatedPowerSeries:
    """Primitive with zero constant term; the order grows by one."""
    k = np.arange(1, f.order + 2, dtype=float)
    return TruncatedPowerSeries(np.concatenate(([0.0], f.coeffs / k)))


def _tail_ratios(coeffs: np.ndarray) -> list[float]:
    # Zeros (e.g. odd coefficients of an even function) are skipped; the
    # ratio across a gap is normalised per index step.
    idx = [k for k, c in enumerate(coeffs) if c != 0.0]
    ratios = []
    for i, j in zip(idx, idx[1:]):
        ratios.append(float(abs(coeffs[j] / coeffs[i]) ** (1.0 / (j - i))))
    return ratios


def classify_tail(f: TruncatedPowerSeries, growth: float = 1.2) -> ConvergenceFlag:
    """Judge the behaviour of a series from its last ceil(N/3) coefficients.

    Ratios |c_{k+1}/c_k| that exceed ``growth`` and keep increasing mark
    a divergent (zero-radius) series; ratios falling towards zero mark a
    convergent one; ratios pinned near one mark a series on the edge of
    its disc of convergence.
    """
    n = f.order
    if n < 8:
        raise ValueError("classify_tail needs a series of order >= 8")
    window = math.ceil(n / 3)
    tail = f.coeffs[n - window:]
    if not np.any(tail):
        return ConvergenceFlag("converged", 0.0)
    ratios = _tail_ratios(tail)
    if len(ratios) < 2:
        return ConvergenceFlag("undetermined", None)
    first, last = ratios[0], ratios[-1]
    if min(ratios) > growth and last > first * 1.1:
        return ConvergenceFlag("divergent", last)
    if last < 1.0 and last < 0.9 * first:
        return ConvergenceFlag("converged", last)
    if max(abs(r - 1.0) for r in ratios) < 0.05:
        return ConvergenceFlag("conditionally-convergent", last)
    return ConvergenceFlag("undetermined", last)


# Named series used across the package and by the command-line front end.

def exp_series(order: Optional[int] = None, scale: float = 1.0) -> TruncatedPowerSeries:
    """Coefficients of exp(scale * x)."""
    return series_from_terms(lambda r: scale ** r / math.factorial(r), order,
                             "exp" if scale == 1.0 else f"exp({scale:g}x)")


def geometric_series(order: Optional[int] = None, ratio: float = 1.0) -> TruncatedPowerSeries:
    """Coefficients ratio**r of 1/(1 - ratio*x)."""
    return series_from_terms(lambda r: ratio ** r, order, "geometric")


def tricomi_c0_series(order: Optional[int] = None) -> TruncatedPowerSeries:
    """C_0(x) = sum (-x)^r / (r!)^2."""
    return series_from_terms(lambda r: (-1) ** r / math.factorial(r) ** 2, order, "tricomi_c0")


def bessel_j0_series(order: Optional[int] = None) -> TruncatedPowerSeries:
    """J_0(x) in powers of x; odd coefficients vanish."""
    def term(k: int) -> float:
        if k % 2:
            return 0.0
        r = k // 2
        return (-1) ** r / (math.factorial(r) ** 2 * 4.0 ** r)
    return series_from_terms(term, order, "bessel_j0")


def gaussian_quarter_series(order: Optional[int] = None) -> TruncatedPowerSeries:
    """exp(-(x/2)^2) in powers of x."""
    def term(k: int) -> float:
        if k % 2:
            return 0.0
        r = k // 2
        return (-1) ** r / (math.factorial(r) * 4.0 ** r)
    return series_from_terms(term, order, "gaussian_quarter")


def monomial_series(s: int, order: Optional[int] = None) -> TruncatedPowerSeries:
    if order is None:
        order = max(default_order(), s)
    return series_from_terms(lambda r: 1.0 if r == s else 0.0, order, f"x^{s}")


def from_coefficients(coeffs: Iterable[float] | Sequence[float],
                      label: Optional[str] = None) -> TruncatedPowerSeries:
    return TruncatedPowerSeries(np.asarray(list(coeffs), dtype=float), label)


NAMED_SERIES: dict[str, Callable[[Optional[int]], TruncatedPowerSeries]] = {
    "exp": lambda order=None: exp_series(order),
    "exp_neg": lambda order=None: exp_series(order, -1.0),
    "geometric": lambda order=None: geometric_series(order),
    "geometric_alt": lambda order=None: geometric_series(order, -1.0),
    "tricomi_c0": tricomi_c0_series,
    "bessel_j0": bessel_j0_series,
    "gaussian_quarter": gaussian_quarter_series,
}


def named_series(name: str, order: Optional[int] = None) -> TruncatedPowerSeries:
    try:
        build = NAMED_SERIES[name]
    except KeyError:
        raise KeyError(f"unknown series {name!r}; choose from {sorted(NAMED_SERIES)}") from None
    return build(order)
