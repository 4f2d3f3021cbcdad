"""ODE oracles: dense-output integration of the drift equation.

Both the resolvent slice r(., s) and the mean x solve the same second-order
equation

    y'' + (1/(1+t) - a) y' - ((a+b)/(1+t)) y = 0,

differing only in initial data.  `solve_drift_ode` integrates it with an
embedded explicit Runge-Kutta 5(4) pair (adaptive step, dense output).  The
mean also has a first-order integro-differential oracle `solve_mean_integro`
obtained by carrying the running integral as extra state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .errors import InvalidArgumentError, StiffnessError


@dataclass
class OdeSolution:
    """Dense-output solution on [abscissae[0], abscissae[-1]]."""

    abscissae: np.ndarray
    values: np.ndarray
    derivative_values: np.ndarray
    tol: float
    _dense: object = field(repr=False, default=None)

    def __call__(self, t):
        out = self._dense(np.asarray(t, dtype=float))
        return out[0]

    def derivative(self, t):
        out = self._dense(np.asarray(t, dtype=float))
        return out[1]


def _integrate(rhs, t0, t1, y0, tol, max_step=np.inf):
    sol = solve_ivp(rhs, (t0, t1), y0, method="RK45", rtol=tol, atol=tol,
                    dense_output=True, max_step=max_step)
    if not sol.success:
        reached = float(sol.t[-1]) if sol.t.size else t0
        raise StiffnessError(f"step-size failure: {sol.message}", t_reached=reached)
    return sol


def solve_drift_ode(a: float, b: float, s: float, t_max: float, tol: float,
                    y0=None) -> OdeSolution:
    """Integrate the second-order drift equation from t = s to t_max.

    Default initial data (1, a) gives the resolvent slice r(., s).
    Backward integration (t_max < s) is allowed; it is used to extend the
    degenerate second solutions to the left of their anchor.
    """
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")
    if s < 0 or t_max < 0:
        raise InvalidArgumentError("times must be nonnegative")
    if y0 is None:
        y0 = (1.0, a)

    def rhs(t, y):
        return (y[1], -(1.0 / (1.0 + t) - a) * y[1] + (a + b) / (1.0 + t) * y[0])

    sol = _integrate(rhs, s, t_max, list(y0), tol)
    return OdeSolution(sol.t, sol.y[0], sol.y[1], tol, sol.sol)


def solve_mean_integro(a: float, b: float, psi0: float, psi_int: float,
                       t_max: float, tol: float) -> OdeSolution:
    """First-order oracle for the mean: state (x, A) with A(t) the running
    integral of x from -1, so x' = a x + b A/(1+t), A' = x, A(0) = psi_int."""
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")

    def rhs(t, y):
        return (a * y[0] + b * y[1] / (1.0 + t), y[0])

    sol = _integrate(rhs, 0.0, t_max, [psi0, psi_int], tol)
    deriv = a * sol.y[0] + b * sol.y[1] / (1.0 + sol.t)

    class _XOnly:
        def __init__(self, dense):
            self._dense = dense

        def __call__(self, t):
            y = self._dense(np.asarray(t, dtype=float))
            tt = np.asarray(t, dtype=float)
            return np.vstack([y[0], a * y[0] + b * y[1] / (1.0 + tt)])

    return OdeSolution(sol.t, sol.y[0], deriv, tol, _XOnly(sol.sol))
