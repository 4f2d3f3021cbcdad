"""Tricomi's confluent hypergeometric function U(alpha, beta, x) for x > 0.

Only beta in {1, 2} is supported publicly: that is the exact envelope the
resolvent decompositions consume (alpha = -b/a, 1 - b/a, 1 + b/a as (a, b)
range over the plane).  Anything else raises UnsupportedParametersError.

Route selection:

* alpha a nonpositive integer:  U(-n, beta, x) is the degree-n polynomial
  (-1)^n sum_k C(n, k) (beta+k)_{n-k} (-x)^k, evaluated by Horner.
* x > 40:                       Poincare expansion x^{-alpha} times the
  alternating Pochhammer series, truncated at its smallest term.
* alpha > 0, x <= 40:           Laplace integral
  U = Gamma(alpha)^{-1} int_0^inf e^{-xu} u^{alpha-1} (1+u)^{beta-alpha-1} du
  under the substitution u = exp(t - e^{-t}) (trapezoid converges
  geometrically; the endpoint singularity u^{alpha-1} is absorbed).
* alpha < 0 non-integer, x <= 40: downward recurrence in alpha from a
  starting pair with alpha + m in (1, 2], computed by the integral route.
  U is dominant as alpha decreases, so the recurrence is stable.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError, UnsupportedParametersError
from .accuracy import TARGET_REL_ERR, FnAccuracy
from .gammafn import gammaln_abs, is_nonpositive_integer

_ASYMPTOTIC_SWITCH = 40.0
_EPS = np.finfo(float).eps
_H = 0.1            # exp-sinh step (one halving is used for the error estimate)
_T_MIN, _T_MAX = -30.0, 16.0   # hard caps on the substituted-variable window


def _check_beta(beta):
    if beta not in (1, 2) and beta not in (1.0, 2.0):
        raise UnsupportedParametersError(
            f"tricomi_u supports beta in {{1, 2}} only, got beta={beta!r}")
    return float(beta)


def _poly_coeffs(n: int, beta: float) -> np.ndarray:
    """Coefficients c_k of U(-n, beta, x) = sum_k c_k x^k."""
    coeffs = np.empty(n + 1)
    for k in range(n + 1):
        poch = 1.0
        for j in range(n - k):
            poch *= beta + k + j
        coeffs[k] = ((-1.0) ** n) * math.comb(n, k) * poch * ((-1.0) ** k)
    return coeffs


def _poly_eval(coeffs: np.ndarray, x):
    val = np.zeros_like(x)
    for c in coeffs[::-1]:
        val = val * x + c
    return val


def _u_asymptotic(alpha, beta, x):
    """x^{-alpha} sum_k (-1)^k (alpha)_k (alpha-beta+1)_k / (k! x^k)."""
    term = np.ones_like(x)
    total = np.ones_like(x)
    smallest = np.full_like(x, np.inf)
    for k in range(0, 80):
        term = term * (alpha + k) * (alpha - beta + 1.0 + k) / (k + 1.0) * (-1.0 / x)
        mag = np.abs(term)
        if np.all(mag >= smallest):
            break
        term = np.where(mag >= smallest, 0.0, term)
        smallest = np.minimum(smallest, mag)
        total = total + term
        if np.all(mag <= 1e-18):
            break
    trunc = np.where(np.isinf(smallest), 0.0, smallest)
    val = np.exp(-alpha * np.log(x)) * total
    rel = (trunc + 4.0 * _EPS * np.abs(total)) / np.maximum(np.abs(total), 1e-300)
    return val, rel


def _u_window(alpha, beta, xmin):
    """Window [t_lo, t_hi] outside which the substituted integrand is < 1e-19
    of its peak for every x >= xmin."""
    # left tail is governed by u^alpha = exp(alpha (t - e^{-t}))
    target = -46.0 / alpha
    lo, hi = _T_MIN, 2.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if mid - math.exp(-mid) < target:
            lo = mid
        else:
            hi = mid
    t_lo = max(_T_MIN, lo - 0.5)
    # right tail is governed by e^{-xu}, against polynomial growth of the rest
    t_hi = 2.0
    grow = max(0.0, beta - alpha - 1.0) + max(0.0, alpha)
    while t_hi < _T_MAX:
        u = math.exp(t_hi - math.exp(-t_hi))
        if -xmin * u + grow * math.log1p(u) < -46.0:
            break
        t_hi += 1.0
    return t_lo, t_hi


def _u_integral(alpha, beta, x):
    """Laplace-integral route for alpha > 0; x a 1-D array."""
    t_lo, t_hi = _u_window(alpha, beta, float(np.min(x)))
    n = int(math.ceil((t_hi - t_lo) / _H))
    n += n % 2  # even panel count so the half-resolution subsample aligns
    t = t_lo + (t_hi - t_lo) * np.arange(n + 1) / n
    h = t[1] - t[0]
    emt = np.exp(-t)
    u = np.exp(t - emt)
    # integrand after substitution: e^{-xu} u^alpha (1+u)^{beta-alpha-1} (1+e^{-t})
    logu = t - emt
    base = alpha * logu + (beta - alpha - 1.0) * np.log1p(u) + np.log1p(emt)
    expo = -np.multiply.outer(x, u) + base  # (nx, nt)
    g = np.exp(np.maximum(expo, -745.0))
    total = h * g.sum(axis=-1)
    coarse = 2.0 * h * g[..., ::2].sum(axis=-1)
    lg = gammaln_abs(alpha)
    val = total * math.exp(-lg)
    rel = np.abs(total - coarse) / np.maximum(np.abs(total), 1e-300) + 1e-14
    return val, rel


def _u_recurrence(alpha, beta, x):
    """Downward recurrence U(a-1) = (2a - beta + x) U(a) - a (a-beta+1) U(a+1)."""
    m = int(math.ceil(-alpha)) + 1
    a0 = alpha + m  # in (1, 2]
    u_hi, e_hi = _u_integral(a0 + 1.0, beta, x)
    u_mid, e_mid = _u_integral(a0, beta, x)
    rel = np.maximum(e_hi, e_mid)
    a = a0
    for _ in range(m):
        u_lo = (2.0 * a - beta + x) * u_mid - a * (a - beta + 1.0) * u_hi
        u_hi, u_mid = u_mid, u_lo
        a -= 1.0
    return u_mid, rel + 8.0 * _EPS * m


def tricomi_u(alpha: float, beta: float, x, *, with_accuracy: bool = False):
    """U(alpha, beta, x) for x > 0 and beta in {1, 2}; alpha any real."""
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise DomainError("tricomi_u requires finite parameters")
    b = _check_beta(beta)
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("tricomi_u requires finite x > 0")
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr).astype(float)

    if is_nonpositive_integer(alpha):
        n = int(round(-alpha))
        if n > 150:
            raise UnsupportedParametersError(f"polynomial degree {n} too large")
        coeffs = _poly_coeffs(n, b)
        val = _poly_eval(coeffs, a)
        scale = _poly_eval(np.abs(coeffs), a)
        rel = 2.0 * _EPS * (n + 1) * scale / np.maximum(np.abs(val), 1e-300)
    else:
        def _moderate(z):
            return _u_integral(alpha, b, z) if alpha > 0 else _u_recurrence(alpha, b, z)

        val = np.empty_like(a)
        rel = np.empty_like(a)
        hi = a > _ASYMPTOTIC_SWITCH
        if np.any(hi):
            v, e = _u_asymptotic(alpha, b, a[hi])
            redo = e > 1e-11   # expansion too blunt here (large |alpha|)
            if np.any(redo):
                v2, e2 = _moderate(a[hi][redo])
                v, e = v.copy(), e.copy()
                v[redo] = v2
                e[redo] = e2
            val[hi] = v
            rel[hi] = e
        lo = ~hi
        if np.any(lo):
            v, e = _moderate(a[lo])
            val[lo] = v
            rel[lo] = e

    out = float(val[0]) if scalar else val.reshape(arr.shape)
    if not with_accuracy:
        return out
    return out, FnAccuracy(TARGET_REL_ERR, float(np.max(rel)))


def tricomi_u_prime(alpha: float, beta: float, x, *, with_accuracy: bool = False):
    """d/dx U(alpha, beta, x) = -alpha U(alpha+1, beta+1, x); beta = 1 only."""
    if float(beta) != 1.0:
        raise UnsupportedParametersError("tricomi_u_prime only supports beta = 1")
    res = tricomi_u(alpha + 1.0, 2.0, x, with_accuracy=with_accuracy)
    if with_accuracy:
        v, acc = res
        return -alpha * v, acc
    return -alpha * res


def tricomi_polynomial_coefficients(n: int, beta: float = 1.0) -> np.ndarray:
    """Coefficients of the degree-n polynomial U(-n, beta, x) in ascending order."""
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    return _poly_coeffs(n, _check_beta(beta))
