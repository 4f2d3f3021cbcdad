"""Autocovariance of X by quadrature, long-memory constants, decay fitting,
limiting (large-t) autocovariance and Yule-Walker residuals.

For t and Delta >= 0,

    Cov(X(t), X(t+Delta)) = sigma^2 int_0^t r(t, s) r(t+Delta, s) ds.

At fixed t the lag decay is polynomial with exponent -(1+b/a) and constant

    c_t = sigma^2 b |a|^{-1-b/a} int_0^t r(t, s)(1+s) U(1-b/a, 2, |a|(1+s)) ds,

while at fixed lag the large-t limit is the exponential OU autocovariance
(plus an additive constant on the a+b = 0 line): the process is transiently
non-stationary with "long memory" in one limit order and "short memory" in
the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BOUNDARY_TOL, Params, RegimeLabel, classify
from .errors import DomainError, SignChangeError, UnsupportedParametersError
from .quadrature import quad_adaptive, quad_to_infinity
from .resolvent import basis, resolvent_eval, resolvent_ode_oracle
from .specfun import tricomi_u

_DEFAULT_QUAD_TOL = 1e-9


@dataclass(frozen=True)
class AcfEstimate:
    t: float
    deltas: np.ndarray
    values: np.ndarray
    quad_tol: float


@dataclass(frozen=True)
class DecayFit:
    fitted_exponent: float
    theoretical_exponent: float
    fitted_constant: float
    c_t_quadrature: float
    delta_range: tuple[float, float]
    fit_rms: float    # rms residual of the log-log linear fit (large => not a power law)


def _gamma_t(params: Params, t: float, delta: float, quad_tol: float,
             oracle_tol: float | None = None) -> float:
    """sigma^2 int_0^{min(t, t+Delta)} r(t,s) r(t+Delta,s) ds, Delta >= -t."""
    upper = min(t, t + delta)
    if upper <= 0.0:
        return 0.0
    a, b = params.a, params.b
    if oracle_tol is not None:
        def f(ss):
            out = np.empty_like(ss)
            for i, s in enumerate(ss):
                sol = resolvent_ode_oracle(a, b, float(s), t + max(delta, 0.0) + 1e-9, oracle_tol)
                out[i] = sol(t) * sol(t + delta)
            return out
    else:
        def f(ss):
            return resolvent_eval(a, b, t, ss) * resolvent_eval(a, b, t + delta, ss)
    res = quad_adaptive(f, 0.0, upper, abs_tol=quad_tol, rel_tol=quad_tol)
    return params.sigma ** 2 * res.value


def covariance(params: Params, t: float, delta: float, *,
               quad_tol: float = _DEFAULT_QUAD_TOL, use_ode_oracle: bool = False) -> float:
    """Cov(X(t), X(t+Delta)) for t, Delta >= 0 by adaptive quadrature.

    use_ode_oracle=True routes r through the second-order ODE integrator for
    an implementation-independent cross-check (slow; small t only).
    """
    if t < 0.0 or delta < 0.0:
        raise DomainError("covariance requires t, Delta >= 0")
    return _gamma_t(params, t, delta, quad_tol, 1e-10 if use_ode_oracle else None)


def acf_estimate(params: Params, t: float, deltas, *,
                 quad_tol: float = _DEFAULT_QUAD_TOL) -> AcfEstimate:
    ds = np.asarray(deltas, dtype=float)
    if np.any(np.diff(ds) <= 0.0) or np.any(ds < 0.0):
        raise DomainError("deltas must be nonnegative and increasing")
    vals = np.array([covariance(params, t, float(d), quad_tol=quad_tol) for d in ds])
    return AcfEstimate(t, ds, vals, quad_tol)


def _require_recurrent(params: Params, who: str):
    a, b = params.a, params.b
    if not (a < 0.0 and a + b <= BOUNDARY_TOL):
        raise UnsupportedParametersError(f"{who} requires a < 0 and a + b <= 0")


def ct_limit(params: Params, t: float, *, quad_tol: float = _DEFAULT_QUAD_TOL) -> float:
    """Long-memory constant c_t = lim_{Delta} Cov(X(t),X(t+Delta)) Delta^{1+b/a}."""
    _require_recurrent(params, "ct_limit")
    if t < 0.0:
        raise DomainError("ct_limit requires t >= 0")
    a, b = params.a, params.b
    if abs(b) <= BOUNDARY_TOL or t == 0.0:
        return 0.0
    aa = abs(a)
    al = 1.0 - b / a

    def f(ss):
        return resolvent_eval(a, b, t, ss) * (1.0 + ss) * tricomi_u(al, 2.0, aa * (1.0 + ss))

    res = quad_adaptive(f, 0.0, t, abs_tol=quad_tol, rel_tol=quad_tol)
    return params.sigma ** 2 * b * aa ** (-1.0 - b / a) * res.value


def limiting_acf(params: Params, delta: float, *, quad_tol: float = 1e-10) -> float:
    """lim_{t->inf} Cov(X(t), X(t+Delta)): the stationary OU autocovariance,
    plus an additive constant on the a + b = 0 line."""
    _require_recurrent(params, "limiting_acf")
    if delta < 0.0:
        raise DomainError("limiting_acf requires Delta >= 0")
    a, b = params.a, params.b
    base = params.sigma ** 2 / (2.0 * abs(a)) * math.exp(a * delta)
    if abs(a + b) > BOUNDARY_TOL:
        return base
    return base + shifted_covariance_constant(params, quad_tol=quad_tol)


def shifted_covariance_constant(params: Params, *, quad_tol: float = 1e-10) -> float:
    """The additive constant on a + b = 0:
    sigma^2 b^2 |a|^{-2-2b/a} int_0^inf (1+s)^2 U(1-b/a, 2, |a|(1+s))^2 ds.
    Also equals lim_t c_t there, and Var[C] uses the same integral off the line."""
    a, b = params.a, params.b
    aa = abs(a)
    al = 1.0 - b / a

    def f(ss):
        u = tricomi_u(al, 2.0, aa * (1.0 + ss))
        return (1.0 + ss) ** 2 * u * u

    res = quad_to_infinity(f, 0.0, abs_tol=quad_tol, rel_tol=quad_tol)
    return params.sigma ** 2 * b * b * aa ** (-2.0 - 2.0 * b / a) * res.value


def decay_fit(params: Params, t: float, delta_min: float, delta_max: float,
              n_points: int = 16, *, quad_tol: float = _DEFAULT_QUAD_TOL) -> DecayFit:
    """Least-squares decay exponent of the lag autocovariance at fixed t.

    Evaluates Cov on a log-spaced lag grid through the separated product form
    (two s-quadratures once, then special functions per lag), fits
    log|Cov| ~ log Delta, and compares the plateau of Cov Delta^{1+b/a}
    against the c_t quadrature.
    """
    label = classify(params.a, params.b).label
    if label not in (RegimeLabel.RECURRENT_OU, RegimeLabel.RECURRENT_SHIFTED,
                     RegimeLabel.DEGENERATE_OU):
        raise UnsupportedParametersError("decay_fit requires a recurrent regime")
    if n_points < 8:
        raise DomainError("n_points must be >= 8")
    if delta_min <= 0.0 or delta_max / delta_min < 10.0:
        raise DomainError("need delta_max / delta_min >= 10")
    a, b = params.a, params.b
    deltas = np.geomspace(delta_min, delta_max, n_points)

    if abs(b) <= BOUNDARY_TOL:
        vals = np.array([covariance(params, t, float(d), quad_tol=quad_tol) for d in deltas])
    else:
        bp = basis(a, b)

        def fa(ss):
            return resolvent_eval(a, b, t, ss) * bp.dA(ss)

        def fb(ss):
            return resolvent_eval(a, b, t, ss) * bp.dB(ss)

        ca = params.sigma ** 2 * quad_adaptive(fa, 0.0, t, abs_tol=quad_tol, rel_tol=quad_tol).value
        cb = params.sigma ** 2 * quad_adaptive(fb, 0.0, t, abs_tol=quad_tol, rel_tol=quad_tol).value
        vals = ca * bp.rA(deltas + t) + cb * bp.rB(deltas + t)

    signs = np.sign(vals)
    if np.any(signs[1:] * signs[:-1] < 0.0):
        idx = int(np.argmax(signs[1:] * signs[:-1] < 0.0))
        raise SignChangeError(
            f"covariance changes sign between Delta={deltas[idx]:g} and {deltas[idx+1]:g}",
            crossing=float(deltas[idx]))

    logd = np.log(deltas)
    logc = np.log(np.abs(vals))
    slope, intercept = np.polyfit(logd, logc, 1)
    resid = logc - (slope * logd + intercept)
    fitted_constant = float(np.mean(vals * deltas ** (1.0 + b / a)))
    return DecayFit(
        fitted_exponent=float(slope),
        theoretical_exponent=-(1.0 + b / a),
        fitted_constant=fitted_constant,
        c_t_quadrature=ct_limit(params, t, quad_tol=quad_tol),
        delta_range=(float(delta_min), float(delta_max)),
        fit_rms=float(np.sqrt(np.mean(resid ** 2))),
    )


def yule_walker_residual(params: Params, t: float, delta: float, *,
                         quad_tol: float = _DEFAULT_QUAD_TOL) -> float:
    """Relative residual of the Yule-Walker-type equation for gamma_t.

    gamma_t'(Delta) - a gamma_t(Delta) - b/(1+t+Delta) int_{-t}^Delta gamma_t
    - [Delta < 0] sigma^2 r(t, t+Delta), the derivative by central
    differences; scaled by max(|a gamma|, |integral term|, sigma^2)."""
    if t <= 0.0:
        raise DomainError("yule_walker_residual requires t > 0")
    if delta < -t:
        raise DomainError("requires Delta >= -t")
    a, b = params.a, params.b

    def gam(d: float) -> float:
        return _gamma_t(params, t, d, quad_tol)

    h = 1e-4 * (1.0 + abs(delta))
    dgam = (gam(delta + h) - gam(delta - h)) / (2.0 * h)

    def gam_vec(ws):
        return np.array([gam(float(w)) for w in ws])

    integral = quad_adaptive(gam_vec, -t, delta, abs_tol=quad_tol * 10,
                             rel_tol=1e-7).value
    g0 = gam(delta)
    resid = dgam - a * g0 - b / (1.0 + t + delta) * integral
    if delta < 0.0:
        resid -= params.sigma ** 2 * resolvent_eval(a, b, t, t + delta)
    scale = max(abs(a * g0), abs(b / (1.0 + t + delta) * integral), params.sigma ** 2)
    return resid / scale
