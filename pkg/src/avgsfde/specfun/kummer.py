"""Kummer's confluent hypergeometric function M(alpha, beta, x), real x >= 0.

Strategy: ascending Taylor series up to x = 45 (terms of one ultimate sign
for every real alpha, so no catastrophic cancellation); beyond that, the
complete large-x expansion with both the exponentially dominant term and the
algebraic cos(pi alpha) companion, each truncated at its smallest term.  If
the expansion cannot reach ~1e-12 (large |alpha| near the switch) those
elements fall back to the series with the factor e^{-x} folded into the
first term, which stays representable up to x ~ 700.

The exponential factor is carried in log space; `scaled=True` returns
e^{-x} M(alpha, beta, x).
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from ..errors import DomainError, OverflowFlag
from .accuracy import TARGET_REL_ERR, FnAccuracy
from .gammafn import gammaln_abs, is_nonpositive_integer, rgamma, sinpi

_SERIES_SWITCH = 45.0
_FOLD_LIMIT = 700.0
_MAX_FLOAT_LOG = math.log(np.finfo(float).max)
_EPS = np.finfo(float).eps


def _gamma_sign(z: float) -> float:
    if is_nonpositive_integer(z):
        return 0.0
    if z > 0:
        return 1.0
    return math.copysign(1.0, sinpi(z))


def _m_series(alpha, beta, x, scaled, fold=False):
    """Taylor series; x is a 1-D array.  Returns (scaled-or-plain value, rel err).

    With fold=True the sum starts at e^{-x} and the result is always the
    scaled value e^{-x} M.
    """
    term = np.exp(-x) if fold else np.ones_like(x)
    total = term.copy()
    abssum = term.copy()
    exact_poly = is_nonpositive_integer(alpha)
    nmax = int(round(-alpha)) if exact_poly else 10**9
    xmax = float(np.max(x))
    for k in range(0, 3000):
        if exact_poly and k == nmax:
            break
        term = term * ((alpha + k) / ((beta + k) * (k + 1.0))) * x
        total = total + term
        abssum = abssum + np.abs(term)
        if k > xmax and np.all(np.abs(term) <= 1e-18 * abssum):
            break
    rel = 4.0 * _EPS * abssum / np.maximum(np.abs(total), 1e-300)
    if fold:
        return total, rel
    if scaled:
        return total * np.exp(-x), rel
    return total, rel


def _poch_series(c1, c2, x, alternating):
    """sum_k (c1)_k (c2)_k / k! * (+-1/x)^k truncated at the smallest term."""
    term = np.ones_like(x)
    total = np.ones_like(x)
    smallest = np.full_like(x, np.inf)
    sgn = -1.0 if alternating else 1.0
    for k in range(0, 60):
        term = term * (c1 + k) * (c2 + k) / (k + 1.0) * (sgn / x)
        mag = np.abs(term)
        if np.all(mag >= smallest):
            break
        term = np.where(mag >= smallest, 0.0, term)
        smallest = np.minimum(smallest, mag)
        total = total + term
        if np.all(mag <= 1e-18):
            break
    trunc = np.where(np.isinf(smallest), 0.0, smallest)
    return total, trunc


def _m_asymptotic(alpha, beta, x, scaled):
    """Large-x expansion: dominant e^x x^{alpha-beta} plus algebraic x^{-alpha}."""
    s1, e1 = _poch_series(beta - alpha, 1.0 - alpha, x, alternating=False)
    s2, e2 = _poch_series(alpha, alpha - beta + 1.0, x, alternating=True)

    sign1 = _gamma_sign(beta) * _gamma_sign(alpha)
    if sign1 != 0.0:
        logc1 = gammaln_abs(beta) - gammaln_abs(alpha)
        logt1 = logc1 + (alpha - beta) * np.log(x) + (0.0 if scaled else x)
        with np.errstate(over="ignore"):
            t1 = sign1 * np.exp(logt1) * s1
            t1_mag = np.exp(logt1)
        t1_err = t1_mag * (e1 + 4.0 * _EPS * np.abs(s1))
    else:
        t1 = np.zeros_like(x)
        t1_err = np.zeros_like(x)

    c2 = rgamma(beta - alpha) * math.cos(math.pi * alpha)
    gb = _gamma_sign(beta) * math.exp(gammaln_abs(beta))
    shift = -x if scaled else np.zeros_like(x)
    t2 = gb * c2 * np.exp(-alpha * np.log(x) + shift) * s2
    t2_err = np.abs(gb * c2 * np.exp(-alpha * np.log(x) + shift)) * (e2 + 4.0 * _EPS * np.abs(s2))

    val = t1 + t2
    err = (t1_err + t2_err) / np.maximum(np.abs(val), 1e-300)
    return val, err


def kummer_m(alpha: float, beta: float, x, *, scaled: bool = False, with_accuracy: bool = False):
    """M(alpha, beta, x) for real parameters, x >= 0; beta not in {0, -1, -2, ...}.

    With scaled=True returns e^{-x} M(alpha, beta, x).  Values exceeding the
    floating range come back as signed infinity with an OverflowFlag warning.
    """
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise DomainError("kummer_m requires finite parameters")
    if is_nonpositive_integer(beta):
        raise DomainError(f"kummer_m undefined for beta a nonpositive integer: {beta!r}")
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0):
        raise DomainError("kummer_m requires finite x >= 0")
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr).astype(float).ravel()

    val = np.empty_like(a)
    err = np.empty_like(a)
    lo = (a <= _SERIES_SWITCH) | is_nonpositive_integer(alpha)
    if np.any(lo):
        v, e = _m_series(alpha, beta, a[lo], scaled)
        val[lo] = v
        err[lo] = e
    hi = ~lo
    if np.any(hi):
        v, e = _m_asymptotic(alpha, beta, a[hi], scaled)
        redo = (e > 1e-12) & (a[hi] <= _FOLD_LIMIT)
        if np.any(redo):
            xs = a[hi][redo]
            vf, ef = _m_series(alpha, beta, xs, scaled=True, fold=True)
            if not scaled:
                with np.errstate(over="ignore"):
                    vf = vf * np.exp(xs)
            v = v.copy()
            e = e.copy()
            v[redo] = vf
            e[redo] = ef
        val[hi] = v
        err[hi] = e
    if not scaled and np.any(~np.isfinite(val)):
        warnings.warn("kummer_m overflow; returning inf (use scaled=True)", OverflowFlag, stacklevel=2)
        err = np.where(np.isfinite(val), err, 0.0)

    out = float(val[0]) if scalar else val.reshape(arr.shape)
    if not with_accuracy:
        return out
    return out, FnAccuracy(TARGET_REL_ERR, float(np.max(err)))


def kummer_m_prime(alpha: float, beta: float, x, *, with_accuracy: bool = False):
    """d/dx M(alpha, beta, x) = (alpha/beta) M(alpha+1, beta+1, x)."""
    res = kummer_m(alpha + 1.0, beta + 1.0, x, with_accuracy=with_accuracy)
    if with_accuracy:
        v, acc = res
        return (alpha / beta) * v, acc
    return (alpha / beta) * res
