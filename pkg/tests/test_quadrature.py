import math

import numpy as np
import pytest

from avgsfde.quadrature import quad_adaptive, quad_to_infinity


def test_polynomial_exact():
    res = quad_adaptive(lambda x: 3.0 * x ** 2, 0.0, 2.0)
    assert res.converged
    assert res.value == pytest.approx(8.0, rel=1e-13)


def test_oscillatory():
    res = quad_adaptive(np.sin, 0.0, 50.0, rel_tol=1e-11, abs_tol=1e-13)
    assert res.value == pytest.approx(1.0 - math.cos(50.0), rel=1e-10)
    assert res.error <= 1e-8


def test_corner_peak():
    res = quad_adaptive(lambda x: 1.0 / np.sqrt(x + 1e-8), 0.0, 1.0,
                        abs_tol=1e-10, rel_tol=1e-10, max_panels=8000)
    exact = 2.0 * (math.sqrt(1.0 + 1e-8) - math.sqrt(1e-8))
    assert res.value == pytest.approx(exact, rel=1e-8)


def test_improper_exponential():
    res = quad_to_infinity(lambda x: np.exp(-x), 0.0, abs_tol=1e-12, rel_tol=1e-10)
    assert res.converged
    assert res.value == pytest.approx(1.0, rel=1e-9)


def test_improper_algebraic_tail():
    # tail ~ 1/T needs the extrapolation step to converge quickly
    res = quad_to_infinity(lambda x: 1.0 / (1.0 + x) ** 2, 0.0,
                           abs_tol=1e-10, rel_tol=1e-7)
    assert res.value == pytest.approx(1.0, rel=1e-5)
    assert math.isfinite(res.tail_estimate)


def test_improper_gaussian():
    res = quad_to_infinity(lambda x: np.exp(-x * x), 0.0, abs_tol=1e-12, rel_tol=1e-10)
    assert res.value == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-9)


def test_empty_interval():
    res = quad_adaptive(np.exp, 1.0, 1.0)
    assert res.value == 0.0 and res.converged
