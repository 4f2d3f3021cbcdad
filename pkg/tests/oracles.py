"""Brute-force reference oracles, independent of the library's own paths.

These deliberately use naive, slow methods (high-precision term summation,
direct quadrature of integral representations) so frozen expected values in
the tests come from a route that shares no code with the implementation.
"""

from __future__ import annotations

import math

import mpmath as mp
from scipy.integrate import quad


def kummer_series(alpha: float, beta: float, x: float, dps: int = 200) -> float:
    """M(alpha, beta, x) by direct Taylor summation at `dps` digits."""
    with mp.workdps(dps):
        a = mp.mpf(alpha)
        b = mp.mpf(beta)
        z = mp.mpf(x)
        term = mp.mpf(1)
        total = mp.mpf(1)
        k = 0
        while True:
            term = term * (a + k) / ((b + k) * (k + 1)) * z
            total += term
            k += 1
            if abs(term) < mp.eps * abs(total) and k > x:
                break
            if k > 100000:
                raise RuntimeError("series did not converge")
        return float(total)


def tricomi_laplace_quad(alpha: float, beta: float, x: float) -> float:
    """U(alpha, beta, x) for alpha > 0 by adaptive quadrature of
    Gamma(alpha)^{-1} int_0^inf e^{-xu} u^{alpha-1} (1+u)^{beta-alpha-1} du,
    via an independent integrator (QUADPACK)."""
    if alpha <= 0:
        raise ValueError("integral representation needs alpha > 0")

    def f(u):
        return math.exp(-x * u) * u ** (alpha - 1.0) * (1.0 + u) ** (beta - alpha - 1.0)

    val, _ = quad(f, 0.0, math.inf, epsabs=1e-14, epsrel=1e-13, limit=400)
    return val / math.gamma(alpha)


def bessel_j_series(order: int, x: float, dps: int = 60) -> float:
    """J_order(x) by the ascending series at high precision."""
    with mp.workdps(dps):
        q = mp.mpf(x) ** 2 / 4
        term = (mp.mpf(x) / 2) ** order / mp.factorial(order)
        total = term
        for k in range(1, 400):
            term = term * (-q) / (k * (k + order))
            total += term
            if abs(term) < mp.eps * (abs(total) + 1):
                break
        return float(total)


def bessel_y0_series(x: float, dps: int = 60) -> float:
    """Y_0(x) from the log/harmonic ascending series at high precision."""
    with mp.workdps(dps):
        z = mp.mpf(x)
        q = z * z / 4
        j0 = mp.mpf(bessel_j_series(0, x, dps))
        term = mp.mpf(1)
        tail = mp.mpf(0)
        h = mp.mpf(0)
        for k in range(1, 400):
            term = term * q / (k * k)
            h += mp.mpf(1) / k
            contrib = (-1) ** (k + 1) * h * term
            tail += contrib
            if abs(contrib) < mp.eps:
                break
        val = (2 / mp.pi) * ((mp.log(z / 2) + mp.euler) * j0 + tail)
        return float(val)


def bessel_i_series(order: int, x: float, dps: int = 60) -> float:
    with mp.workdps(dps):
        q = mp.mpf(x) ** 2 / 4
        term = (mp.mpf(x) / 2) ** order / mp.factorial(order)
        total = term
        for k in range(1, 500):
            term = term * q / (k * (k + order))
            total += term
            if term < mp.eps * total:
                break
        return float(total)


def bessel_k0_integral(x: float) -> float:
    """K_0(x) = int_0^inf e^{-x cosh t} dt by independent quadrature."""

    def f(t):
        return math.exp(-x * math.cosh(t))

    upper = math.acosh(1.0 + 60.0 / x)
    val, _ = quad(f, 0.0, upper, epsabs=1e-16, epsrel=1e-14, limit=200)
    return val


def ou_resolvent(a: float, t: float, s: float) -> float:
    return math.exp(a * (t - s)) if t >= s else 0.0


def ou_autocovariance(a: float, sigma: float, t: float, delta: float) -> float:
    return sigma ** 2 * math.exp(a * delta) * (1.0 - math.exp(2.0 * a * t)) / (2.0 * abs(a))
