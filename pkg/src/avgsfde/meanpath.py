"""Deterministic mean x(t) = E[X(t)], growth normalizers, and the limiting
statistics of the growth/shift theorems.

The mean solves the same second-order equation as the resolvent slices, with
initial data x(0) = psi(0), x'(0) = a psi(0) + b int psi.  Its coefficients
on the regime basis come from one 2x2 solve at t = 0 (the closed-form
coefficient formulas are exercised as oracles in the test suite).

`limit_stats` evaluates, by quadrature of the stated integrals, the mean and
variance of the almost-sure limits:

* polynomial growth (a < 0 < a+b):  C = lim X(t) / t^{-(1+b/a)}
* exponential growth (a > 0):       C = lim X(t) / (e^{at} t^{b/a})
* subexponential growth (a=0, b>0): C = lim X(t) / (t^{-1/4} e^{2 sqrt(bt)})
* shifted recurrence (a < 0 = a+b): L = lim (X - OU) = lim running average
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BOUNDARY_TOL, Params, Regime, RegimeLabel, classify
from .errors import DomainError, UnsupportedParametersError
from .quadrature import quad_adaptive, quad_to_infinity
from .resolvent import BasisPair, basis
from .specfun import bessel_k, gamma, tricomi_u

_E_E = math.exp(math.e)   # lower domain edge where sqrt(2 t loglog t) is real


@dataclass
class MeanSolution:
    params: Params
    regime: Regime
    cA: float
    cB: float
    basis: BasisPair | None   # None for the b = 0 closed form

    def __call__(self, t):
        return mean_eval(self, t)


@dataclass(frozen=True)
class LimitStats:
    mean_C: float
    var_C: float
    truncation_T: float
    quadrature_tol: float


def mean_solution(params: Params, *, wronskian_scale: float = 1.0) -> MeanSolution:
    """Coefficients of x on the regime basis (2x2 solve at t = 0)."""
    a, b = params.a, params.b
    regime = classify(a, b)
    if abs(b) <= BOUNDARY_TOL:
        return MeanSolution(params, regime, params.psi0, 0.0, None)
    bp = basis(a, b, wronskian_scale=wronskian_scale)
    slope0 = a * params.psi0 + bp.b * params.psi_int
    ca, cb = bp.coefficients_from_ic(params.psi0, slope0, 0.0)
    return MeanSolution(params, regime, float(ca), float(cb), bp)


def mean_eval(sol: MeanSolution, t):
    """x(t) = cA rA(t) + cB rB(t); psi0 e^{at} when b = 0."""
    tt = np.asarray(t, dtype=float)
    if np.any(tt < 0.0):
        raise DomainError("mean_eval requires t >= 0")
    if sol.basis is None:
        return sol.params.psi0 * np.exp(sol.params.a * tt)
    return sol.cA * sol.basis.rA(tt) + sol.cB * sol.basis.rB(tt)


def growth_normalizer(regime: Regime, a: float, b: float, t):
    """The regime's almost-sure growth/fluctuation normalizer at time t."""
    tt = np.asarray(t, dtype=float)
    label = regime.label
    if label == RegimeLabel.EXPONENTIAL_GROWTH:
        if np.any(tt <= 0.0):
            raise DomainError("normalizer needs t > 0")
        return np.exp(a * tt) * tt ** (b / a)
    if label == RegimeLabel.POLYNOMIAL_GROWTH:
        if np.any(tt <= 0.0):
            raise DomainError("normalizer needs t > 0")
        return tt ** (-(1.0 + b / a))
    if label == RegimeLabel.SUBEXPONENTIAL_GROWTH:
        if np.any(tt <= 0.0):
            raise DomainError("normalizer needs t > 0")
        return tt ** -0.25 * np.exp(2.0 * np.sqrt(b * tt))
    if label in (RegimeLabel.RECURRENT_OU, RegimeLabel.RECURRENT_SHIFTED):
        if np.any(tt <= 1.0):
            raise DomainError("normalizer needs t > 1")
        return np.sqrt(2.0 * np.log(tt))
    if label in (RegimeLabel.BROWNIAN_LIKE, RegimeLabel.DEGENERATE_BM):
        if np.any(tt <= _E_E):
            raise DomainError("normalizer needs t > e^e")
        return np.sqrt(2.0 * tt * np.log(np.log(tt)))
    raise UnsupportedParametersError(f"no growth normalizer for {label.value}")


def _poly_growth_stats(p: Params, tol: float) -> LimitStats:
    a, b = p.a, p.b
    aa = abs(a)
    al = 1.0 - b / a
    mean = aa ** (-1.0 - b / a) * b * (
        p.psi0 * tricomi_u(al, 2.0, aa) + p.psi_int * tricomi_u(-b / a, 1.0, aa))

    def integrand(s):
        u = tricomi_u(al, 2.0, aa * (1.0 + s))
        return (1.0 + s) ** 2 * u * u

    res = quad_to_infinity(integrand, 0.0, abs_tol=tol, rel_tol=tol)
    var = p.sigma ** 2 * b * b * aa ** (-2.0 - 2.0 * b / a) * res.value
    return LimitStats(float(mean), float(var), res.truncation, tol)


def _exp_growth_stats(p: Params, tol: float) -> LimitStats:
    a, b = p.a, p.b
    al = 1.0 + b / a
    mean = a ** (b / a) * (
        a * p.psi0 * tricomi_u(al, 2.0, a) + b * p.psi_int * tricomi_u(al, 1.0, a))

    def integrand(s):
        u = tricomi_u(al, 2.0, a * (1.0 + s))
        return np.exp(-2.0 * a * s) * (1.0 + s) ** 2 * u * u

    res = quad_to_infinity(integrand, 0.0, abs_tol=tol, rel_tol=tol)
    var = p.sigma ** 2 * a ** (2.0 + 2.0 * b / a) * res.value
    return LimitStats(float(mean), float(var), res.truncation, tol)


def _subexp_growth_stats(p: Params, tol: float) -> LimitStats:
    b = p.b
    mean = (p.psi0 * b ** 0.25 * bessel_k(1, 2.0 * math.sqrt(b))
            + b ** 0.75 * p.psi_int * bessel_k(0, 2.0 * math.sqrt(b))) / math.sqrt(math.pi)

    def integrand(s):
        z = 2.0 * np.sqrt(b * (s + 1.0))
        k1e = bessel_k(1, z, scaled=True)
        return (s + 1.0) * k1e * k1e * np.exp(-2.0 * z)

    res = quad_to_infinity(integrand, 0.0, abs_tol=tol, rel_tol=tol)
    var = p.sigma ** 2 * math.sqrt(b) / math.pi * res.value
    return LimitStats(float(mean), float(var), res.truncation, tol)


def _shifted_stats(p: Params, tol: float) -> LimitStats:
    """E[L], Var[L] for a < 0, a + b = 0.

    The innermost integral collapses through d/dz U(alpha, 1, z) =
    -alpha U(alpha+1, 2, z):  int_w^inf U(1-b/a, 2, |a|(1+s)) ds
    = U(-b/a, 1, |a|(1+w)) / (|a| (-b/a)).
    """
    a, b = p.a, p.b
    aa = abs(a)
    al = -b / a            # = 1 on the shifted line
    gal = gamma(al)
    pref = b * b * gal / (aa * al)

    def inner_tail(w):
        return tricomi_u(al, 1.0, aa * (1.0 + w))

    iw0 = pref * inner_tail(0.0)

    def mean_integrand(u):
        return np.exp(a * u) * inner_tail(u)

    mres = quad_to_infinity(mean_integrand, 0.0, abs_tol=tol, rel_tol=tol)
    mean = p.psi_int * iw0 + p.psi0 * pref * mres.value

    def h_scaled(u: float) -> float:
        # e^{-au} h(u) = pref int_0^inf e^{av} U(alpha, 1, |a|(1+u+v)) dv
        def f(v):
            return np.exp(a * v) * inner_tail(u + v)
        r = quad_to_infinity(f, 0.0, abs_tol=tol, rel_tol=tol)
        return pref * r.value

    def outer(us):
        return np.array([h_scaled(float(u)) ** 2 for u in us])

    vres = quad_to_infinity(outer, 0.0, abs_tol=tol, rel_tol=max(tol, 1e-7))
    var = p.sigma ** 2 * vres.value
    return LimitStats(float(mean), float(var), vres.truncation, tol)


def limit_stats(params: Params, *, quad_tol: float = 1e-10) -> LimitStats:
    """Mean and variance of the limiting random variable for the regime."""
    label = classify(params.a, params.b).label
    if label == RegimeLabel.POLYNOMIAL_GROWTH:
        return _poly_growth_stats(params, quad_tol)
    if label == RegimeLabel.EXPONENTIAL_GROWTH:
        return _exp_growth_stats(params, quad_tol)
    if label == RegimeLabel.SUBEXPONENTIAL_GROWTH:
        return _subexp_growth_stats(params, quad_tol)
    if label == RegimeLabel.RECURRENT_SHIFTED:
        return _shifted_stats(params, quad_tol)
    raise UnsupportedParametersError(f"no limit statistics for {label.value}")
