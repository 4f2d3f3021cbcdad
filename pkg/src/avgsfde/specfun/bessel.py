"""Bessel J, Y and modified Bessel I, K of orders 0 and 1, real arguments.

Evaluation strategy, per function:

* J0/J1 and Y0/Y1: ascending series (with the log/harmonic-number terms for
  Y) up to x = 12, Hankel large-argument expansions truncated at the smallest
  term beyond.  Near the switch both branches carry ~1e-11 of the envelope
  sqrt(2/(pi x)).
* I0/I1: ascending series (all terms positive) up to x = 18, exponential
  asymptotic expansion beyond.  Scaled variants e^{-x} I are exact in both
  branches, so no overflow below x ~ 1e300.
* K0/K1: ascending log-series up to x = 2; for x > 2 the even integral
  representation K_nu(x) = int_0^inf e^{-x cosh u} cosh(nu u) du evaluated by
  the trapezoidal rule, which converges geometrically for this integrand.

All functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from ..errors import DomainError, OverflowFlag
from .accuracy import TARGET_REL_ERR, FnAccuracy

_EULER_GAMMA = 0.5772156649015328606
_EPS = np.finfo(float).eps

_JY_SWITCH = 12.0
_I_SWITCH = 18.0
_K_SWITCH = 2.0

_MAX_FLOAT_LOG = math.log(np.finfo(float).max)


def _prepare(x, name, low_open):
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)):
        raise DomainError(f"{name} requires finite arguments")
    if low_open:
        if np.any(arr <= 0.0):
            raise DomainError(f"{name} requires x > 0 (logarithmic singularity at 0)")
    else:
        if np.any(arr < 0.0):
            raise DomainError(f"{name} requires x >= 0")
    return arr


def _check_order(order):
    if order not in (0, 1):
        raise DomainError(f"order must be 0 or 1, got {order!r}")


def _finish(value, err, scalar, with_accuracy):
    if scalar:
        value = float(value)
    if not with_accuracy:
        return value
    worst = float(np.max(err)) if np.ndim(err) else float(err)
    return value, FnAccuracy(TARGET_REL_ERR, worst)


# ---------------------------------------------------------------------------
# ascending series
# ---------------------------------------------------------------------------

def _j_series(order, x):
    """J0 or J1 ascending series; returns (value, abs err estimate)."""
    q = 0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    abssum = np.ones_like(x)
    for k in range(1, 120):
        term = term * (-q) / (k * (k + order))
        total = total + term
        abssum = abssum + np.abs(term)
        if np.all(np.abs(term) <= 1e-18 * abssum):
            break
    prefac = np.ones_like(x) if order == 0 else 0.5 * x
    return prefac * total, np.abs(prefac) * abssum * 4.0 * _EPS


def _y0_series(x):
    j0v, j0err = _j_series(0, x)
    q = 0.25 * x * x
    term = np.ones_like(x)          # q^k / (k!)^2 at k = 0
    total = np.zeros_like(x)        # sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2
    abssum = np.zeros_like(x)
    hk = 0.0
    for k in range(1, 120):
        term = term * q / (k * k)
        hk += 1.0 / k
        contrib = ((-1.0) ** (k + 1)) * hk * term
        total = total + contrib
        abssum = abssum + np.abs(contrib)
        if np.all(np.abs(contrib) <= 1e-18 * (1.0 + abssum)):
            break
    lead = (np.log(0.5 * x) + _EULER_GAMMA) * j0v
    val = (2.0 / math.pi) * (lead + total)
    err = (2.0 / math.pi) * (np.abs(lead) * 4.0 * _EPS + abssum * 4.0 * _EPS) + np.abs(j0err)
    return val, err


def _y1_series(x):
    j1v, j1err = _j_series(1, x)
    q = 0.25 * x * x
    # sum_k (-1)^k [psi(k+1)+psi(k+2)] q^k/(k!(k+1)!), psi(k+1) = -gamma + H_k
    term = np.ones_like(x)
    hk, hk1 = 0.0, 1.0
    total = (hk + hk1 - 2.0 * _EULER_GAMMA) * term
    abssum = np.abs(total)
    for k in range(1, 120):
        term = term * q / (k * (k + 1))
        hk += 1.0 / k
        hk1 += 1.0 / (k + 1)
        contrib = ((-1.0) ** k) * (hk + hk1 - 2.0 * _EULER_GAMMA) * term
        total = total + contrib
        abssum = abssum + np.abs(contrib)
        if np.all(np.abs(contrib) <= 1e-18 * (1.0 + abssum)):
            break
    val = (2.0 / math.pi) * np.log(0.5 * x) * j1v - 2.0 / (math.pi * x) - (x / (2.0 * math.pi)) * total
    err = (np.abs(np.log(0.5 * x) * j1v) + 2.0 / x + np.abs(x) * abssum) * 4.0 * _EPS / math.pi
    return val, err


def _i_series(order, x, scaled):
    q = 0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, 200):
        term = term * q / (k * (k + order))
        total = total + term
        if np.all(term <= 1e-18 * total):
            break
    prefac = np.ones_like(x) if order == 0 else 0.5 * x
    val = prefac * total
    if scaled:
        val = val * np.exp(-x)
    return val, np.abs(val) * 8.0 * _EPS


def _k_series(order, x):
    q = 0.25 * x * x
    if order == 0:
        i0v, _ = _i_series(0, x, scaled=False)
        term = np.ones_like(x)
        total = np.zeros_like(x)
        hk = 0.0
        for k in range(1, 80):
            term = term * q / (k * k)
            hk += 1.0 / k
            total = total + hk * term
            if np.all(hk * term <= 1e-18 * (1.0 + total)):
                break
        val = -(np.log(0.5 * x) + _EULER_GAMMA) * i0v + total
        err = (np.abs(np.log(0.5 * x) + _EULER_GAMMA) * i0v + total + 1.0) * 4.0 * _EPS
        return val, err
    i1v, _ = _i_series(1, x, scaled=False)
    term = np.ones_like(x)
    hk, hk1 = 0.0, 1.0
    total = (hk + hk1 - 2.0 * _EULER_GAMMA) * term
    abssum = np.abs(total)
    for k in range(1, 80):
        term = term * q / (k * (k + 1))
        hk += 1.0 / k
        hk1 += 1.0 / (k + 1)
        contrib = (hk + hk1 - 2.0 * _EULER_GAMMA) * term
        total = total + contrib
        abssum = abssum + np.abs(contrib)
        if np.all(np.abs(contrib) <= 1e-18 * (1.0 + abssum)):
            break
    val = np.log(0.5 * x) * i1v + 1.0 / x - 0.25 * x * total
    err = (np.abs(np.log(0.5 * x)) * i1v + 1.0 / x + 0.25 * x * abssum) * 4.0 * _EPS
    return val, err


# ---------------------------------------------------------------------------
# large-argument expansions
# ---------------------------------------------------------------------------

def _hankel_pq(order, x):
    """P and Q sums of the Hankel expansion, truncated at the smallest term."""
    mu = 4.0 * order * order
    inv8x = 1.0 / (8.0 * x)
    p = np.ones_like(x)
    q = np.zeros_like(x)
    ak = np.ones_like(x)       # a_k / x^k, alternating sign folded in below
    smallest = np.full_like(x, np.inf)
    err = np.zeros_like(x)
    for k in range(1, 40):
        ak = ak * (mu - (2.0 * k - 1.0) ** 2) * inv8x / k
        mag = np.abs(ak)
        if np.all(mag >= smallest):
            break
        grow = mag >= smallest
        ak = np.where(grow, 0.0, ak)  # freeze elements past their smallest term
        smallest = np.minimum(smallest, mag)
        if k % 2 == 1:
            q = q + ((-1.0) ** ((k - 1) // 2)) * ak
        else:
            p = p + ((-1.0) ** (k // 2)) * ak
        err = np.where(grow, err, mag)
        if np.all(mag <= 1e-18):
            break
    return p, q, err + smallest * (smallest < np.inf)


def _jy_asymptotic(order, x, kind):
    p, q, err = _hankel_pq(order, x)
    chi = x - (0.5 * order + 0.25) * math.pi
    amp = np.sqrt(2.0 / (math.pi * x))
    if kind == "j":
        val = amp * (p * np.cos(chi) - q * np.sin(chi))
    else:
        val = amp * (p * np.sin(chi) + q * np.cos(chi))
    return val, amp * (err + 4.0 * _EPS)


def _ik_asymptotic(order, x, kind, scaled):
    """I (kind='i') or K (kind='k') expansion; K terms alternate, I terms add."""
    mu = 4.0 * order * order
    inv8x = 1.0 / (8.0 * x)
    sign = -1.0 if kind == "i" else 1.0
    term = np.ones_like(x)
    total = np.ones_like(x)
    smallest = np.full_like(x, np.inf)
    for k in range(1, 60):
        term = term * (mu - (2.0 * k - 1.0) ** 2) * inv8x / k * sign
        mag = np.abs(term)
        if np.all(mag >= smallest):
            break
        term = np.where(mag >= smallest, 0.0, term)
        smallest = np.minimum(smallest, mag)
        total = total + term
        if np.all(mag <= 1e-18):
            break
    trunc = np.where(np.isinf(smallest), 0.0, smallest)
    if kind == "i":
        amp = 1.0 / np.sqrt(2.0 * math.pi * x)
        if scaled:
            return amp * total, amp * (trunc + 4.0 * _EPS)
        with np.errstate(over="ignore"):
            val = np.exp(x) * amp * total
        return val, np.abs(val) * (trunc + 4.0 * _EPS)
    amp = np.sqrt(math.pi / (2.0 * x))
    if scaled:
        return amp * total, amp * (trunc + 4.0 * _EPS)
    return np.exp(-x) * amp * total, np.exp(-x) * amp * (trunc + 4.0 * _EPS)


def _k_integral(order, x, scaled):
    """Trapezoidal rule on K_nu(x) = int_0^inf e^{-x cosh u} cosh(nu u) du.

    The integrand extends evenly to the real line and decays double
    exponentially, so the trapezoid converges geometrically in 1/h.
    """
    xmin = float(np.min(x))
    h = min(0.18, 0.55 / math.sqrt(xmin))
    umax = math.acosh(1.0 + 48.0 / xmin)
    n = int(math.ceil(umax / h)) + 1
    u = np.arange(n + 1) * h
    w = np.ones(n + 1)
    w[0] = 0.5
    coshu = np.cosh(u)
    expo = -np.multiply.outer(x, coshu - 1.0)
    if not scaled:
        expo = expo - x[..., None]
    fac = coshu if order == 1 else 1.0
    vals = h * np.sum(np.exp(expo) * fac * w, axis=-1)
    return vals, np.abs(vals) * 1e-13


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

def _split_eval(x, switch, small_fn, large_fn):
    val = np.empty_like(x)
    err = np.empty_like(x)
    lo = x <= switch
    if np.any(lo):
        v, e = small_fn(x[lo])
        val[lo] = v
        err[lo] = e
    hi = ~lo
    if np.any(hi):
        v, e = large_fn(x[hi])
        val[hi] = v
        err[hi] = e
    return val, err


def bessel_j(order: int, x, *, with_accuracy: bool = False):
    """J_order(x) for order in {0, 1}, x >= 0."""
    _check_order(order)
    arr = _prepare(x, "bessel_j", low_open=False)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    val, err = _split_eval(
        a, _JY_SWITCH,
        lambda z: _j_series(order, z),
        lambda z: _jy_asymptotic(order, z, "j"),
    )
    rel = err / np.maximum(np.abs(val), np.sqrt(2.0 / (math.pi * np.maximum(a, 1.0))))
    return _finish(val[0] if scalar else val.reshape(arr.shape), rel, scalar, with_accuracy)


def bessel_y(order: int, x, *, with_accuracy: bool = False):
    """Y_order(x) for order in {0, 1}, x > 0."""
    _check_order(order)
    arr = _prepare(x, "bessel_y", low_open=True)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    val, err = _split_eval(
        a, _JY_SWITCH,
        _y0_series if order == 0 else _y1_series,
        lambda z: _jy_asymptotic(order, z, "y"),
    )
    rel = err / np.maximum(np.abs(val), np.sqrt(2.0 / (math.pi * np.maximum(a, 1.0))))
    return _finish(val[0] if scalar else val.reshape(arr.shape), rel, scalar, with_accuracy)


def bessel_i(order: int, x, *, scaled: bool = False, with_accuracy: bool = False):
    """I_order(x), or e^{-x} I_order(x) if scaled, for order in {0, 1}, x >= 0."""
    _check_order(order)
    arr = _prepare(x, "bessel_i", low_open=False)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    if not scaled and np.any(a > _MAX_FLOAT_LOG):
        warnings.warn("bessel_i overflow; returning inf (use scaled=True)", OverflowFlag, stacklevel=2)
    val, err = _split_eval(
        a, _I_SWITCH,
        lambda z: _i_series(order, z, scaled),
        lambda z: _ik_asymptotic(order, z, "i", scaled),
    )
    rel = err / np.maximum(np.abs(val), 1e-300)
    rel = np.where(np.isfinite(val), rel, 0.0)
    return _finish(val[0] if scalar else val.reshape(arr.shape), rel, scalar, with_accuracy)


def bessel_k(order: int, x, *, scaled: bool = False, with_accuracy: bool = False):
    """K_order(x), or e^{x} K_order(x) if scaled, for order in {0, 1}, x > 0."""
    _check_order(order)
    arr = _prepare(x, "bessel_k", low_open=True)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)

    def small(z):
        v, e = _k_series(order, z)
        if scaled:
            s = np.exp(z)
            return v * s, e * s
        return v, e

    val, err = _split_eval(a, _K_SWITCH, small, lambda z: _k_integral(order, z, scaled))
    rel = err / np.maximum(np.abs(val), 1e-300)
    return _finish(val[0] if scalar else val.reshape(arr.shape), rel, scalar, with_accuracy)
