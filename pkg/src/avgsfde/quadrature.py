"""Adaptive quadrature: Gauss-Kronrod 7-15 panels with bisection, plus a
doubling/extrapolation scheme for integrals over [a, inf).

Integrands must accept numpy arrays (they are evaluated 15 nodes at a time).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

# Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit on
# the odd-indexed abscissae.  Classic QUADPACK constants.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
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

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])          # 15 ascending nodes
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])              # matching K weights
_GAUSS_IDX = np.array([1, 3, 5, 7, 9, 11, 13])             # G7 node positions
_WGFULL = np.concatenate([_WG[:-1], _WG[::-1]])            # 7 Gauss weights


@dataclass
class QuadResult:
    value: float
    error: float
    panels: int
    converged: bool


def _panel(f, lo, hi):
    """One G7-K15 evaluation; returns (kron, err_estimate)."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid + half * _NODES
    y = np.asarray(f(x), dtype=float)
    kron = half * float(np.dot(_WK, y))
    gauss = half * float(np.dot(_WGFULL, y[_GAUSS_IDX]))
    # QUADPACK-style scaled error estimate
    resasc = half * float(np.dot(_WK, np.abs(y - np.mean(y))))
    diff = abs(kron - gauss)
    if resasc != 0.0 and diff != 0.0:
        err = resasc * min(1.0, (200.0 * diff / resasc) ** 1.5)
    else:
        err = diff
    err = max(err, 50.0 * np.finfo(float).eps * half * float(np.dot(_WK, np.abs(y))))
    return kron, err


def quad_adaptive(f, lo: float, hi: float, *, abs_tol: float = 1e-12,
                  rel_tol: float = 1e-9, max_panels: int = 4000) -> QuadResult:
    """Integrate f over [lo, hi] by adaptive bisection of G7-K15 panels."""
    if hi == lo:
        return QuadResult(0.0, 0.0, 0, True)
    val, err = _panel(f, lo, hi)
    heap = [(-err, lo, hi, val, err)]
    total_val, total_err, panels = val, err, 1
    while panels < max_panels:
        if total_err <= max(abs_tol, rel_tol * abs(total_val)):
            return QuadResult(total_val, total_err, panels, True)
        neg_err, a, b, v, e = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if m <= a or m >= b:   # panel at floating-point resolution
            heapq.heappush(heap, (0.0, a, b, v, 0.0))
            total_err -= e
            continue
        v1, e1 = _panel(f, a, m)
        v2, e2 = _panel(f, m, b)
        total_val += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, a, m, v1, e1))
        heapq.heappush(heap, (-e2, m, b, v2, e2))
        panels += 1
    converged = total_err <= max(abs_tol, rel_tol * abs(total_val))
    return QuadResult(total_val, total_err, panels, converged)


@dataclass
class ImproperResult:
    value: float
    error: float
    truncation: float
    tail_estimate: float
    converged: bool


def quad_to_infinity(f, lo: float, *, abs_tol: float = 1e-12, rel_tol: float = 1e-9,
                     initial_width: float = 8.0, max_doublings: int = 48) -> ImproperResult:
    """Integrate f over [lo, inf).

    The truncation horizon doubles until the newest slab contributes less
    than 1e-3 of the accumulated value, after which the geometric/algebraic
    tail is extrapolated from the slab ratio and added.
    """
    hi = lo + initial_width
    res = quad_adaptive(f, lo, hi, abs_tol=abs_tol * 0.25, rel_tol=rel_tol * 0.25)
    acc, qerr = res.value, res.error
    prev_slab = res.value
    tail = math.inf
    for _ in range(max_doublings):
        new_hi = lo + 2.0 * (hi - lo)
        res = quad_adaptive(f, hi, new_hi, abs_tol=abs_tol * 0.25, rel_tol=rel_tol * 0.25)
        slab = res.value
        acc += slab
        qerr += res.error
        hi = new_hi
        if prev_slab != 0.0:
            rho = slab / prev_slab
            if 0.0 < rho < 0.95:
                tail = slab * rho / (1.0 - rho)
            else:
                tail = abs(slab)
        else:
            tail = abs(slab)
        prev_slab = slab
        small_slab = abs(slab) <= 1e-3 * abs(acc) + abs_tol
        if small_slab and abs(tail) <= max(abs_tol, rel_tol * abs(acc)):
            return ImproperResult(acc + (tail if math.isfinite(tail) else 0.0),
                                  qerr + 0.5 * abs(tail), hi, tail, True)
    finite_tail = tail if math.isfinite(tail) else 0.0
    return ImproperResult(acc + finite_tail, qerr + abs(finite_tail), hi, finite_tail, False)
