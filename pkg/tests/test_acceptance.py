"""Acceptance gate: one test per criterion clause, each printing a
PASS/FAIL line (run with -rA or -s to see all lines).

Six clauses are red by design: their stated tolerances sit inside the
genuine finite-horizon transients of the model, which this implementation
reproduces and cross-validates through independent routes (ODE oracles,
raw-Euler Monte Carlo, high-precision special-function references).  The
quantitative analysis lives in the project notes; the gates are kept at
their stated tolerances rather than loosened to pass.
"""

import pytest

from avgsfde.verify import SUITES

_cache = {}


def _suite(name):
    if name not in _cache:
        _cache[name] = {r.name: r for r in SUITES[name]()}
    return _cache[name]


def _check(suite, names):
    results = _suite(suite)
    lines = []
    ok = True
    for n in names:
        r = results[n]
        lines.append(r.line())
        ok = ok and r.passed
    report = "\n".join(lines)
    print(report)
    assert ok, report


# 1. special-function identities on the log grid
def test_criterion_01_specfun_identities():
    _check("specfun", ["specfun.kummer_wronskian", "specfun.bessel_wronskian",
                       "specfun.modified_bessel_wronskian",
                       "specfun.recurrence_m", "specfun.recurrence_u"])


# 2. resolvent decomposition vs ODE oracle on the 11-pair grid
def test_criterion_02_resolvent_oracle():
    names = [n for n in _suite("resolvent") if n.startswith("resolvent.oracle")]
    _check("resolvent", names)


# 3. closed forms at b = 0
def test_criterion_03_closed_forms():
    _check("closedform", ["closedform.resolvent_b0", "closedform.ou_autocovariance"])


# 4. long-memory decay at fixed start time
def test_criterion_04_long_memory():
    _check("longmemory", ["longmemory.decay_slope", "longmemory.ct_plateau"])


# 5. transient non-stationarity
def test_criterion_05a_limiting_acf():
    # red by design: the transient correction at t=200 is ~3.9%, not <1%
    _check("stationarity", ["stationarity.aplusb_lt_0"])


def test_criterion_05b_limiting_acf_shifted():
    _check("stationarity", ["stationarity.aplusb_eq_0"])


# 6. Brownian-like regime: linear variance growth and mean decay
def test_criterion_06a_variance_linear():
    _check("bessel_variance", ["bessel.variance_linear_growth"])


def test_criterion_06b_mean_decay():
    # red by design: |x(1e4)| = 0.10360 (oscillation trough; envelope 0.10396)
    _check("bessel_variance", ["bessel.mean_decay"])


# 7. polynomial growth ensemble
def test_criterion_07a_poly_growth_mean():
    # red by design: E[X(50)]/50 = 0.2194 sits 4% above E[C] (band is 3%)
    _check("growth_poly", ["growth_poly.mean"])


def test_criterion_07b_poly_growth_variance():
    _check("growth_poly", ["growth_poly.variance"])


# 8. exponential growth ensemble + degenerate tilde branch
def test_criterion_08_exp_growth():
    _check("growth_exp", ["growth_exp.mean", "growth_exp.degenerate_tilde"])


# 9. subexponential growth ensemble
def test_criterion_09_subexp_growth():
    # red by design: E[X(40)]/norm(40) = 1.175 E[C] (sqrt(t+1)-sqrt(t) offset)
    _check("growth_subexp", ["growth_subexp.mean"])


# 10. LIL soft bands
def test_criterion_10a_lil_brownian():
    # red by design: the running sup from t = 10 e^e overshoots the a.s.
    # constant at every seed tested (max sup ~1.3 vs band top 0.75)
    _check("lil", ["lil.brownian_like"])


def test_criterion_10b_lil_recurrent():
    # red by design: measured max sup 0.94-1.20 vs band top 0.92
    _check("lil", ["lil.recurrent"])


# 11. OU coupling
def test_criterion_11_coupling():
    _check("coupling", ["coupling.envelope", "coupling.shifted_level"])


# 12. degenerate-normalization invariance
def test_criterion_12_normalization_invariance():
    names = list(_suite("normalization"))
    _check("normalization", names)


@pytest.fixture(scope="session", autouse=True)
def _summary(request):
    yield
    lines = []
    for results in _cache.values():
        lines.extend(r.line() for r in results.values())
    if lines:
        print("\n=== acceptance summary ===")
        for line in lines:
            print(line)
