"""Resolvent decompositions against the ODE oracle, closed coefficient
formulas, Abel-built second solutions and their asymptotics."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avgsfde.core import classify
from avgsfde.errors import DomainError, InvalidArgumentError, UnsupportedParametersError
from avgsfde.quadrature import quad_adaptive
from avgsfde.resolvent import (
    basis,
    resolvent_eval,
    resolvent_ode_oracle,
    tilde_second_solution,
)
from avgsfde.specfun import bessel_i, bessel_k, gamma, kummer_m, tricomi_u

REGIME_GRID = [(-1.0, 0.5), (-1.0, -0.5), (-1.0, 2.0), (-1.0, -1.0), (-1.0, -2.0),
               (1.0, 1.0), (1.0, -0.5), (1.0, -1.0), (1.0, -2.0), (0.0, 1.0), (0.0, -1.0)]


def test_initial_conditions_exact():
    assert resolvent_eval(-1.0, 0.5, 3.0, 3.0) == 1.0
    assert resolvent_eval(0.0, -1.0, 2.0, 3.0) == 0.0


def test_negative_times_rejected():
    with pytest.raises(DomainError):
        resolvent_eval(-1.0, 0.5, -0.1, 0.0)
    with pytest.raises(DomainError):
        resolvent_eval(-1.0, 0.5, 1.0, -0.5)


def test_b_zero_closed_form():
    assert resolvent_eval(-0.7, 0.0, 2.0, 0.5) == pytest.approx(math.exp(-1.05), rel=1e-14)
    with pytest.raises(UnsupportedParametersError):
        basis(-0.7, 0.0)


def test_basis_shapes_match_special_functions():
    # a < 0: rA = e^{at} U(-b/a, 1, -a(1+t)), rB = e^{at} M(...)
    bp = basis(-1.0, 0.5)
    for t in (0.0, 1.3, 7.0):
        assert bp.rA(t) == pytest.approx(
            math.exp(-t) * tricomi_u(0.5, 1.0, 1.0 + t), rel=1e-12)
        assert bp.rB(t) == pytest.approx(
            math.exp(-t) * kummer_m(0.5, 1.0, 1.0 + t), rel=1e-12)
    # a = 0, b > 0: modified Bessel pair
    bp = basis(0.0, 1.0)
    for t in (0.0, 2.0):
        z = 2.0 * math.sqrt(1.0 + t)
        assert bp.rA(t) == pytest.approx(bessel_i(0, z), rel=1e-12)
        assert bp.rB(t) == pytest.approx(bessel_k(0, z), rel=1e-12)


def test_degenerate_first_solution_polynomial():
    # b/a = 1: rA(t) = e^{at} U(-1, 1, -a(1+t)) = e^{-t} t for a = -1
    bp = basis(-1.0, -1.0)
    for t in (0.5, 2.0, 10.0):
        assert bp.rA(t) == pytest.approx(math.exp(-t) * t, rel=1e-13)


@pytest.mark.parametrize("a,b", REGIME_GRID)
def test_oracle_agreement(a, b):
    worst = 0.0
    for s in (0.0, 3.0, 11.0):
        oracle = resolvent_ode_oracle(a, b, s, 20.0001, 1e-10)
        for t in np.linspace(s + 0.25, 20.0, 6):
            orc = float(oracle(float(t)))
            dec = resolvent_eval(a, b, float(t), s)
            worst = max(worst, abs(dec - orc) / (1.0 + abs(orc)))
    assert worst <= 1e-6


@pytest.mark.parametrize("a,b", REGIME_GRID)
def test_coefficient_identity(a, b):
    bp = basis(a, b)
    ss = np.linspace(0.0, 18.0, 7)
    one = bp.dA(ss) * bp.rA(ss) + bp.dB(ss) * bp.rB(ss)
    slope = bp.dA(ss) * bp.drA(ss) + bp.dB(ss) * bp.drB(ss)
    assert np.max(np.abs(one - 1.0)) <= 1e-8
    assert np.max(np.abs(slope - a)) <= 1e-8


def test_initial_slope_by_differences():
    h = 1e-6
    for a, b in [(-1.0, 0.5), (1.0, -0.5), (0.0, 1.0), (-1.0, -1.0)]:
        for s in (0.0, 2.0):
            fd = (resolvent_eval(a, b, s + h, s) - 1.0) / h
            assert abs(fd - a) <= 1e-5 * (1.0 + abs(a))


def test_positivity_for_positive_b():
    for a, b in [(-1.0, 0.5), (1.0, 1.0), (0.0, 1.0), (-1.0, 2.0)]:
        for s in (0.0, 1.0, 5.0):
            ts = np.linspace(s, s + 15.0, 12)
            assert np.all(resolvent_eval(a, b, ts, s) > 0.0)


def test_integral_form_consistency():
    # r(t,s) = 1 + a int_s^t r + int_s^t b/(1+u) int_s^u r dw du
    for a, b in [(-1.0, 0.5), (1.0, -0.5), (0.0, -1.0)]:
        s, t = 0.7, 6.0

        def inner(u):
            return quad_adaptive(
                lambda w: resolvent_eval(a, b, np.maximum(w, s), s) * (w >= s),
                s, float(u), abs_tol=1e-11, rel_tol=1e-10).value

        term1 = quad_adaptive(lambda u: resolvent_eval(a, b, u, s),
                              s, t, abs_tol=1e-11, rel_tol=1e-10).value

        def outer(us):
            return np.array([b / (1.0 + float(u)) * inner(u) for u in us])

        term2 = quad_adaptive(outer, s, t, abs_tol=1e-9, rel_tol=1e-8).value
        lhs = resolvent_eval(a, b, t, s)
        assert lhs == pytest.approx(1.0 + a * term1 + term2, abs=5e-7)


def test_nondegenerate_basis_asymptotics():
    # rA ~ e^{at} |a|^{b/a} t^{b/a} and rB ~ e^{-a}|a|^{-b/a-1} t^{-b/a-1} / Gamma(-b/a)
    a, b = -1.0, 0.5
    bp = basis(a, b)
    t = 1000.0
    lead_a = math.exp(a * t) * abs(a) ** (b / a) * t ** (b / a)
    assert bp.rA(t) / lead_a == pytest.approx(1.0, abs=0.05)
    lead_b = math.exp(-a) * abs(a) ** (-b / a - 1.0) * t ** (-b / a - 1.0) / gamma(-b / a)
    assert bp.rB(t) / lead_b == pytest.approx(1.0, abs=0.05)


def test_tilde_asymptotics_and_cross_route():
    # a < 0, b/a = 1: t^{1+b/a} r2~(t) -> W |a|^{-1-b/a}
    rt = tilde_second_solution(-1.0, -1.0)
    assert rt.value(1e4) * 1e4 ** 2 == pytest.approx(1.0, abs=0.05)
    # a > 0, b/a = -1: e^{-at} t^{-b/a} r4~(t) -> W a^{b/a}
    rt4 = tilde_second_solution(1.0, -1.0)
    assert math.exp(-200.0) * 200.0 * rt4.value(200.0) == pytest.approx(1.0, abs=0.05)
    # cross-route agreement at anchor + 1: forward integral vs backward-extended ODE
    from avgsfde.odesolve import solve_drift_ode
    for a, b in [(-1.0, -1.0), (-1.0, -2.0), (1.0, -2.0)]:
        rt = tilde_second_solution(a, b)
        t1 = rt.anchor
        fwd = rt.value(t1 + 1.0)
        ode = solve_drift_ode(a, b, t1, t1 + 1.0, 1e-12,
                              y0=(rt.value(t1), rt.derivative(t1)))
        assert fwd == pytest.approx(float(ode(t1 + 1.0)), rel=1e-8)


def test_tilde_rejects_nondegenerate():
    with pytest.raises(UnsupportedParametersError):
        tilde_second_solution(-1.0, 0.5)


def test_near_degenerate_snaps_with_flag():
    bp = basis(-1.0, -1.0 - 3e-8)
    assert bp.snapped
    assert bp.b == -1.0
    exact = basis(-1.0, -1.0)
    assert not exact.snapped
    for t, s in [(4.0, 1.0), (12.0, 3.0)]:
        assert resolvent_eval(-1.0, -1.0 - 3e-8, t, s) == pytest.approx(
            resolvent_eval(-1.0, -1.0, t, s), rel=1e-9)


def test_normalization_invariance():
    for a, b in [(-1.0, -1.0), (1.0, -2.0)]:
        r1 = resolvent_eval(a, b, 9.0, 2.5, wronskian_scale=1.0)
        r2 = resolvent_eval(a, b, 9.0, 2.5, wronskian_scale=7.3)
        assert r2 == pytest.approx(r1, rel=1e-10)


def test_closed_form_coefficients_are_oracles():
    # the published d-coefficient formulas reproduce dA/dB on each branch
    a, b = -1.0, 0.5
    bp = basis(a, b)
    al = -b / a
    for s in (0.0, 1.5, 6.0):
        z = -a * (1.0 + s)
        d1 = gamma(al) * (1.0 + s) * math.exp(a) * b * kummer_m(1.0 + al, 2.0, z)
        d2 = gamma(al) * (1.0 + s) * math.exp(a) * b * tricomi_u(1.0 + al, 2.0, z)
        assert bp.dA(s) == pytest.approx(d1, rel=1e-11)
        assert bp.dB(s) == pytest.approx(d2, rel=1e-11)
    a, b = 1.0, 1.0
    bp = basis(a, b)
    al = 1.0 + b / a
    for s in (0.0, 2.0):
        z = a * (1.0 + s)
        d3 = gamma(al) * math.exp(-z) * (1.0 + s) * b * kummer_m(al, 2.0, z)
        d4 = gamma(al) * math.exp(-z) * (1.0 + s) * a * tricomi_u(al, 2.0, z)
        assert bp.dA(s) == pytest.approx(d3, rel=1e-11)
        assert bp.dB(s) == pytest.approx(d4, rel=1e-11)


def test_oracle_requires_valid_window():
    with pytest.raises(InvalidArgumentError):
        resolvent_ode_oracle(-1.0, 0.5, 5.0, 5.0, 1e-9)


def test_ode_solution_fields():
    sol = resolvent_ode_oracle(-1.0, 0.5, 1.0, 6.0, 1e-10)
    assert sol.values[0] == pytest.approx(1.0, abs=1e-12)
    assert sol.derivative_values[0] == pytest.approx(-1.0, abs=1e-12)
    assert np.all(np.diff(sol.abscissae) > 0)


@given(st.floats(min_value=-2.0, max_value=2.0),
       st.floats(min_value=-2.0, max_value=2.0),
       st.floats(min_value=0.0, max_value=15.0))
@settings(max_examples=40, deadline=None)
def test_r_at_equal_times_is_one(a, b, s):
    assert resolvent_eval(a, b, s, s) == 1.0
