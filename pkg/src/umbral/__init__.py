"""Umbral and Borel-transform methods for special functions, with numerical
cross-checks of the resulting identities."""

from .series import (
    ConvergenceFlag,
    PoleError,
    TruncatedPowerSeries,
    beta,
    classify_tail,
    gamma,
    reciprocal_gamma,
)
from .operators import (
    CoefficientTransform,
    UmbralWeight,
    apply_transform,
    bborel,
    borel,
    borel_leroy,
    umbral_apply,
)

__all__ = [
    "CoefficientTransform",
    "ConvergenceFlag",
    "PoleError",
    "TruncatedPowerSeries",
    "UmbralWeight",
    "apply_transform",
    "bborel",
    "beta",
    "borel",
    "borel_leroy",
    "classify_tail",
    "gamma",
    "reciprocal_gamma",
    "umbral_apply",
]

__version__ = "0.1.0"
