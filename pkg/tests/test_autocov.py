"""Autocovariance quadrature, memory constants, decay fits and the
Yule-Walker residual identity."""

import math

import numpy as np
import pytest

from avgsfde.autocov import (
    acf_estimate,
    covariance,
    ct_limit,
    decay_fit,
    limiting_acf,
    shifted_covariance_constant,
    yule_walker_residual,
)
from avgsfde.core import Params
from avgsfde.errors import SignChangeError, UnsupportedParametersError
from avgsfde.quadrature import quad_adaptive
from avgsfde.resolvent import basis, resolvent_eval
from oracles import ou_autocovariance


def test_zero_start_time():
    p = Params(a=-1.0, b=0.5)
    assert covariance(p, 0.0, 3.0) == 0.0


def test_ou_closed_form():
    p = Params(a=-1.0, b=0.0, sigma=1.0)
    for t in (2.0,):
        for d in (1.0,):
            assert covariance(p, t, d, quad_tol=1e-12) == pytest.approx(
                ou_autocovariance(-1.0, 1.0, t, d), rel=1e-11)
    # the spec'd spot value e^{-1} (1 - e^{-4}) / 2
    assert covariance(p, 2.0, 1.0, quad_tol=1e-12) == pytest.approx(
        math.exp(-1.0) * (1.0 - math.exp(-4.0)) / 2.0, rel=1e-11)


def test_ode_oracle_route_agrees():
    p = Params(a=-1.0, b=0.5, sigma=1.0)
    direct = covariance(p, 1.0, 3.0)
    via_ode = covariance(p, 1.0, 3.0, use_ode_oracle=True)
    assert via_ode == pytest.approx(direct, abs=1e-9)


def test_positive_for_positive_b():
    p = Params(a=-1.0, b=0.5, sigma=1.0)
    est = acf_estimate(p, 2.0, [0.0, 0.5, 5.0, 40.0])
    assert np.all(est.values > 0.0)
    assert est.values[0] > 0.0  # Var[X(t)] >= 0


def test_ct_examples():
    assert ct_limit(Params(a=-1.0, b=0.0), 1.0) == 0.0
    assert ct_limit(Params(a=-1.0, b=0.5), 1.0) > 0.0
    with pytest.raises(UnsupportedParametersError):
        ct_limit(Params(a=-1.0, b=2.0), 1.0)
    with pytest.raises(UnsupportedParametersError):
        ct_limit(Params(a=1.0, b=-2.0), 1.0)


def test_ct_negative_b_asymptotics():
    # c_t / t^{b/a} -> sigma^2 b |a|^{-3} (|b|+|a|)/(2|b|+|a|) = -0.375
    p = Params(a=-1.0, b=-0.5, sigma=1.0)
    t = 1000.0
    assert ct_limit(p, t) / t ** 0.5 == pytest.approx(-0.375, rel=0.10)


def test_ct_half_line_trend():
    # 2b + a = 0: c_t/(t^{-1/2} log t) tends to sigma^2/4 with shrinking error
    p = Params(a=-1.0, b=0.5, sigma=1.0)
    devs = []
    for t in (100.0, 1000.0, 10000.0):
        ratio = ct_limit(p, t) / (t ** -0.5 * math.log(t))
        devs.append(abs(ratio - 0.25))
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] <= 0.15 * 0.25


def test_ct_shifted_line_converges():
    p = Params(a=-1.0, b=1.0, sigma=1.0)
    cts = {t: ct_limit(p, t) for t in (50.0, 100.0, 200.0, 400.0)}
    gaps = [abs(cts[100.0] - cts[50.0]), abs(cts[200.0] - cts[100.0]),
            abs(cts[400.0] - cts[200.0])]
    assert gaps[0] > gaps[1] > gaps[2]
    assert cts[400.0] == pytest.approx(shifted_covariance_constant(p), rel=1e-3)


def test_decay_fit_slope_and_plateau():
    p = Params(a=-1.0, b=0.5, sigma=1.0)
    fit = decay_fit(p, 1.0, 50.0, 500.0, 16)
    assert fit.theoretical_exponent == pytest.approx(-0.5)
    assert fit.fitted_exponent == pytest.approx(-0.5, abs=0.05)
    assert fit.fit_rms < 0.01
    assert fit.c_t_quadrature == pytest.approx(ct_limit(p, 1.0), rel=1e-9)


def test_decay_fit_ou_poor_linear_fit():
    # b = 0 decays exponentially; the log-log fit must flag strong curvature
    p = Params(a=-1.0, b=0.0, sigma=1.0)
    fit = decay_fit(p, 1.0, 5.0, 50.0, 10)
    assert fit.fit_rms > 0.1


def test_decay_fit_sign_change_reported():
    p = Params(a=-1.0, b=-0.5, sigma=1.0)
    with pytest.raises(SignChangeError) as exc:
        decay_fit(p, 1.0, 0.3, 80.0, 16)
    assert exc.value.crossing is not None


def test_product_form_consistency():
    # Cov(t, t+D) from the separated form c_{A,t} rA(t+D) + c_{B,t} rB(t+D)
    for a, b in [(-1.0, 0.5), (-1.0, -1.0)]:
        p = Params(a=a, b=b, sigma=1.0)
        t = 1.0
        bp = basis(a, b)
        ca = quad_adaptive(lambda s: resolvent_eval(a, b, t, s) * bp.dA(s),
                           0.0, t, abs_tol=1e-12, rel_tol=1e-10).value
        cb = quad_adaptive(lambda s: resolvent_eval(a, b, t, s) * bp.dB(s),
                           0.0, t, abs_tol=1e-12, rel_tol=1e-10).value
        for d in (2.0, 8.0):
            sep = ca * float(bp.rA(t + d)) + cb * float(bp.rB(t + d))
            direct = covariance(p, t, d, quad_tol=1e-12)
            assert sep == pytest.approx(direct, rel=1e-6)


def test_limiting_acf_values():
    p = Params(a=-1.0, b=0.5, sigma=1.0)
    assert limiting_acf(p, 0.0) == pytest.approx(0.5, rel=1e-14)
    assert limiting_acf(p, 1.0) == pytest.approx(math.exp(-1.0) / 2.0, rel=1e-14)
    with pytest.raises(UnsupportedParametersError):
        limiting_acf(Params(a=1.0, b=1.0), 1.0)


def test_limiting_acf_shifted_additive_constant():
    p = Params(a=-1.0, b=1.0, sigma=1.0)
    const = shifted_covariance_constant(p)
    assert limiting_acf(p, 40.0) == pytest.approx(
        math.exp(-40.0) / 2.0 + const, rel=1e-9)
    # the large-lag limit of the limiting ACF equals lim_t c_t
    assert const == pytest.approx(ct_limit(p, 400.0), rel=2e-3)


def test_shifted_cov_tail_monotone():
    # on a + b = 0 the lag covariance settles to c_t; tail gap shrinks
    p = Params(a=-1.0, b=1.0, sigma=1.0)
    t = 30.0
    ct = ct_limit(p, t)
    gaps = [abs(covariance(p, t, d) - ct) for d in (20.0, 60.0, 180.0)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_yule_walker_residuals():
    p = Params(a=-1.0, b=0.5, sigma=1.0)
    assert abs(yule_walker_residual(p, 2.0, 1.0)) <= 1e-4
    assert abs(yule_walker_residual(p, 2.0, -1.0)) <= 1e-4
    # boundary: gamma_t(-t) = Cov(X(t), X(0)) = 0 since X(0) is deterministic
    from avgsfde.autocov import _gamma_t
    assert _gamma_t(p, 2.0, -2.0, 1e-10) == 0.0


def test_yule_walker_reduces_to_ou():
    # b = 0, Delta > 0: gamma' = a gamma
    p = Params(a=-0.7, b=0.0, sigma=1.0)
    assert abs(yule_walker_residual(p, 2.0, 1.5)) <= 1e-4
