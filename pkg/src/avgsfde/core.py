"""Model parameters and classification of the (a, b) plane.

The model is

    dX(t) = (a X(t) + b (1+t)^{-1} \\int_{-1}^t X(s) ds) dt + sigma dB(t),

with X = psi on [-1, 0].  Everything the t >= 0 dynamics depend on enters
through (a, b, sigma, psi(0), \\int_{-1}^0 psi), which is what `Params` holds.

The (a, b) plane splits into nine mutually exclusive regimes; the three
principal ones (recurrent fluctuation, polynomial growth, exponential growth)
are bordered by the a = 0 and a + b = 0 lines and the degenerate b = 0 axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgumentError

#: absolute tolerance for comparing a and a+b against the regime boundaries
BOUNDARY_TOL = 1e-12

#: relative tolerance of the integer test on b/a for the degenerate branches
DEGENERATE_RTOL = 1e-9


class RegimeLabel(Enum):
    RECURRENT_OU = "RecurrentOU"
    RECURRENT_SHIFTED = "RecurrentShifted"
    POLYNOMIAL_GROWTH = "PolynomialGrowth"
    EXPONENTIAL_GROWTH = "ExponentialGrowth"
    SUBEXPONENTIAL_GROWTH = "SubexponentialGrowth"
    BROWNIAN_LIKE = "BrownianLike"
    DEGENERATE_OU = "DegenerateOU"
    DEGENERATE_BM = "DegenerateBM"
    DEGENERATE_EXP = "DegenerateExp"


@dataclass(frozen=True)
class Regime:
    label: RegimeLabel
    degenerate_integer: bool

    @property
    def name(self) -> str:
        return self.label.value


@dataclass(frozen=True)
class Params:
    """Model tuple (a, b, sigma, psi(0), int_{-1}^0 psi)."""

    a: float
    b: float
    sigma: float = 1.0
    psi0: float = 1.0
    psi_int: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "sigma", "psi0", "psi_int"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvalidArgumentError(f"{name} must be finite, got {v!r}")
        if self.sigma <= 0:
            raise InvalidArgumentError(f"sigma must be positive, got {self.sigma!r}")

    @property
    def regime(self) -> Regime:
        return classify(self.a, self.b)


def _is_degenerate_ratio(a: float, b: float) -> bool:
    """Integer test on b/a for the analytically degenerate parameter sets.

    True iff b/a is (within DEGENERATE_RTOL, relative) a member of {1, 2, ...}
    for a < 0 or of {-1, -2, ...} for a > 0.  Near-integer ratios are routed
    to the degenerate branch because it is the numerically stable limit.
    """
    if a == 0.0 or b == 0.0:
        return False
    ratio = b / a
    nearest = round(ratio)
    if abs(ratio - nearest) > DEGENERATE_RTOL * (1.0 + abs(ratio)):
        return False
    if a < 0:
        return nearest >= 1
    return nearest <= -1


def classify(a: float, b: float) -> Regime:
    """Classify (a, b) into its asymptotic regime.

    Total and deterministic; the nine labels partition the finite plane.
    Boundaries (a = 0, a + b = 0, b = 0) are detected with absolute
    tolerance BOUNDARY_TOL.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidArgumentError(f"classify requires finite (a, b), got ({a!r}, {b!r})")

    a_zero = abs(a) <= BOUNDARY_TOL
    b_zero = abs(b) <= BOUNDARY_TOL
    degenerate = _is_degenerate_ratio(a, b) and not a_zero and not b_zero

    if b_zero:
        if a_zero:
            return Regime(RegimeLabel.DEGENERATE_BM, False)
        if a < 0:
            return Regime(RegimeLabel.DEGENERATE_OU, False)
        return Regime(RegimeLabel.DEGENERATE_EXP, False)

    if a_zero:
        if b > 0:
            return Regime(RegimeLabel.SUBEXPONENTIAL_GROWTH, False)
        return Regime(RegimeLabel.BROWNIAN_LIKE, False)

    if a > 0:
        return Regime(RegimeLabel.EXPONENTIAL_GROWTH, degenerate)

    total = a + b
    if abs(total) <= BOUNDARY_TOL:
        return Regime(RegimeLabel.RECURRENT_SHIFTED, degenerate)
    if total < 0:
        return Regime(RegimeLabel.RECURRENT_OU, degenerate)
    return Regime(RegimeLabel.POLYNOMIAL_GROWTH, degenerate)


def market_to_ab(alpha: float, beta: float) -> tuple[float, float]:
    """Map the market-model strengths (alpha, beta) to (a, b) = (alpha+beta, -alpha).

    alpha weighs the technical traders (returns vs. historical average),
    beta the feedback traders (returns vs. a reference level).  The map is
    linear and invertible: alpha = -b, beta = a + b.
    """
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise InvalidArgumentError(f"market_to_ab requires finite inputs, got ({alpha!r}, {beta!r})")
    return alpha + beta, -alpha


def ab_to_market(a: float, b: float) -> tuple[float, float]:
    """Inverse of market_to_ab."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidArgumentError(f"ab_to_market requires finite inputs, got ({a!r}, {b!r})")
    return -b, a + b
