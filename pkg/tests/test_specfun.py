"""Special-function kernel against frozen brute-force oracle values and the
identities used downstream."""

import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avgsfde.errors import DomainError, OverflowFlag, UnsupportedParametersError
from avgsfde.specfun import (
    bessel_i,
    bessel_j,
    bessel_k,
    bessel_y,
    digamma,
    gamma,
    kummer_m,
    kummer_m_prime,
    tricomi_u,
    tricomi_u_prime,
)
from avgsfde.specfun.bessel import _I_SWITCH, _JY_SWITCH, _K_SWITCH
from avgsfde.specfun.bessel import _i_series, _ik_asymptotic, _j_series, _jy_asymptotic
from avgsfde.specfun.kummer import _m_asymptotic, _m_series
from avgsfde.specfun.tricomi import _u_asymptotic, _u_integral

# frozen reference values from tests/oracles.py (200-digit Taylor summation
# for M, QUADPACK on the Laplace representation for U, high-precision
# ascending series for J/Y/I, cosh-integral quadrature for K)
M_HALF_1_10 = 4042.7554308904005
U_3HALF_2_1 = 0.6809205902998781
J0_5 = -0.1775967713143383
Y0_5 = -0.30851762524903376
I0_2 = 2.2795853023360673
K0_1 = 0.4210244382407083


class TestGamma:
    def test_trivial(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-13)
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-13)
        assert gamma(0.5) == pytest.approx(1.7724538509055160, rel=1e-13)

    def test_poles(self):
        for x in (0.0, -1.0, -2.0, -7.0):
            with pytest.raises(DomainError):
                gamma(x)

    @given(st.floats(min_value=0.1, max_value=30.0))
    @settings(max_examples=80)
    def test_recurrence(self, x):
        assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-11)

    def test_reflection_negative(self):
        # Gamma(-1.5) = 4 sqrt(pi) / 3
        assert gamma(-1.5) == pytest.approx(4.0 * math.sqrt(math.pi) / 3.0, rel=1e-12)

    def test_digamma(self):
        euler = 0.5772156649015328606
        assert digamma(1.0) == pytest.approx(-euler, rel=1e-12)
        assert digamma(2.0) == pytest.approx(1.0 - euler, rel=1e-12)


class TestKummerM:
    def test_trivial_examples(self):
        assert kummer_m(0.0, 1.0, 3.7) == 1.0
        assert kummer_m(1.0, 1.0, 1.0) == pytest.approx(math.e, rel=1e-13)
        assert kummer_m(1.0, 2.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-13)

    def test_frozen_oracle_value(self):
        assert kummer_m(0.5, 1.0, 10.0) == pytest.approx(M_HALF_1_10, rel=1e-12)

    def test_oracle_reproducible(self):
        from oracles import kummer_series
        assert kummer_series(0.5, 1.0, 10.0) == pytest.approx(M_HALF_1_10, rel=1e-15)

    def test_large_x_asymptotic_shape(self):
        # M(a,b,x) ~ Gamma(b)/Gamma(a) e^x x^{a-b}
        for al, be in [(0.5, 1.0), (1.5, 2.0)]:
            x = 300.0
            lead = gamma(be) / gamma(al) * math.exp(x) * x ** (al - be)
            assert kummer_m(al, be, x) == pytest.approx(lead, rel=10.0 / x)

    def test_switchover_agreement(self):
        for al, be in [(0.25, 1.0), (-0.7, 2.0), (2.5, 1.0), (-3.3, 2.0)]:
            x = np.array([45.0])
            vs, _ = _m_series(al, be, x, scaled=True)
            va, _ = _m_asymptotic(al, be, x, scaled=True)
            assert abs(vs[0] - va[0]) <= 1e-9 * abs(vs[0])

    def test_invalid_beta(self):
        with pytest.raises(DomainError):
            kummer_m(0.5, 0.0, 1.0)
        with pytest.raises(DomainError):
            kummer_m(0.5, -2.0, 1.0)

    def test_overflow_flag(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            v = kummer_m(0.5, 1.0, 800.0)
        assert v == math.inf
        assert any(issubclass(w.category, OverflowFlag) for w in caught)
        assert np.isfinite(kummer_m(0.5, 1.0, 800.0, scaled=True))

    def test_derivative_identity(self):
        # central difference vs (alpha/beta) M(alpha+1, beta+1, x)
        for al, be, x in [(0.5, 1.0, 2.0), (-1.3, 2.0, 7.0)]:
            h = 1e-6
            fd = (kummer_m(al, be, x + h) - kummer_m(al, be, x - h)) / (2.0 * h)
            assert kummer_m_prime(al, be, x) == pytest.approx(fd, rel=1e-8)

    def test_accuracy_reporting(self):
        v, acc = kummer_m(0.5, 1.0, 10.0, with_accuracy=True)
        assert v == pytest.approx(M_HALF_1_10, rel=1e-12)
        assert acc.achieved_rel_err_estimate <= acc.target_rel_err


class TestTricomiU:
    def test_polynomial_examples(self):
        assert tricomi_u(0.0, 1.0, 2.5) == 1.0
        assert tricomi_u(-1.0, 1.0, 3.0) == pytest.approx(2.0, rel=1e-14)
        # U(-2, 1, z) = z^2 - 4z + 2
        z = 1.7
        assert tricomi_u(-2.0, 1.0, z) == pytest.approx(z * z - 4 * z + 2, rel=1e-13)

    def test_frozen_oracle_value(self):
        assert tricomi_u(1.5, 2.0, 1.0) == pytest.approx(U_3HALF_2_1, rel=1e-11)

    def test_oracle_reproducible(self):
        from oracles import tricomi_laplace_quad
        assert tricomi_laplace_quad(1.5, 2.0, 1.0) == pytest.approx(U_3HALF_2_1, rel=1e-12)

    def test_beta_restriction(self):
        with pytest.raises(UnsupportedParametersError):
            tricomi_u(0.5, 3.0, 1.0)
        with pytest.raises(UnsupportedParametersError):
            tricomi_u_prime(0.5, 2.0, 1.0)

    def test_negative_alpha_noninteger(self):
        # downward recurrence route vs the high-precision oracle at beta=1
        import mpmath as mp
        for al in (-0.5, -1.7, -3.3):
            for x in (0.3, 2.0, 15.0, 39.0):
                ref = float(mp.hyperu(al, 1.0, x))
                assert tricomi_u(al, 1.0, x) == pytest.approx(ref, rel=1e-9, abs=1e-12)

    def test_asymptotic_consistency(self):
        # U(a,b,x) x^a -> 1 with O(1/x) error
        for al in (0.25, 0.5, 1.5, 2.5):
            for x in (50.0, 200.0, 1000.0):
                v = tricomi_u(al, 1.0, x) * x ** al
                assert abs(v - 1.0) <= 5.0 / x

    def test_switchover_agreement(self):
        for al in (0.25, 1.5):
            x = np.array([40.0])
            vi, _ = _u_integral(al, 1.0, x)
            va, _ = _u_asymptotic(al, 1.0, x)
            assert abs(vi[0] - va[0]) <= 1e-9 * abs(vi[0])

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            tricomi_u(0.5, 1.0, 0.0)
        with pytest.raises(DomainError):
            tricomi_u(0.5, 1.0, -2.0)


class TestBessel:
    def test_trivial_values(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(1, 0.0) == 0.0
        assert bessel_i(0, 0.0) == 1.0
        assert bessel_i(1, 0.0) == 0.0

    def test_frozen_oracle_values(self):
        assert bessel_j(0, 5.0) == pytest.approx(J0_5, rel=1e-12)
        assert bessel_y(0, 5.0) == pytest.approx(Y0_5, rel=1e-12)
        assert bessel_i(0, 2.0) == pytest.approx(I0_2, rel=1e-13)
        assert bessel_k(0, 1.0) == pytest.approx(K0_1, rel=1e-12)

    def test_oracles_reproducible(self):
        from oracles import (bessel_i_series, bessel_j_series,
                             bessel_k0_integral, bessel_y0_series)
        assert bessel_j_series(0, 5.0) == pytest.approx(J0_5, rel=1e-14)
        assert bessel_y0_series(5.0) == pytest.approx(Y0_5, rel=1e-14)
        assert bessel_i_series(0, 2.0) == pytest.approx(I0_2, rel=1e-14)
        assert bessel_k0_integral(1.0) == pytest.approx(K0_1, rel=1e-11)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            bessel_y(0, 0.0)
        with pytest.raises(DomainError):
            bessel_k(0, -1.0)
        with pytest.raises(DomainError):
            bessel_j(2, 1.0)

    def test_y0_diverges_at_origin(self):
        assert bessel_y(0, 1e-12) < -10.0
        assert bessel_k(0, 1e-12) > 10.0

    def test_wronskians(self):
        for x in np.geomspace(0.1, 80.0, 25):
            x = float(x)
            wj = bessel_j(1, x) * bessel_y(0, x) - bessel_j(0, x) * bessel_y(1, x)
            assert wj == pytest.approx(2.0 / (math.pi * x), rel=1e-10)
            wik = bessel_k(0, x) * bessel_i(1, x) + bessel_k(1, x) * bessel_i(0, x)
            assert wik == pytest.approx(1.0 / x, rel=1e-10)

    def test_derivatives_by_differences(self):
        h = 1e-6
        for x in (0.7, 3.0, 9.0, 30.0):
            di0 = (bessel_i(0, x + h) - bessel_i(0, x - h)) / (2 * h)
            assert abs(di0 - bessel_i(1, x)) <= 1e-6 * max(1.0, bessel_i(1, x))
            dk0 = (bessel_k(0, x + h) - bessel_k(0, x - h)) / (2 * h)
            assert abs(dk0 + bessel_k(1, x)) <= 1e-6 * max(1.0, bessel_k(1, x))

    def test_asymptotic_amplitude(self):
        # J/Y amplitude sqrt(2/(pi x)); I/K exponential envelopes
        for x in (50.0, 80.0):
            amp = math.sqrt(2.0 / (math.pi * x))
            assert math.hypot(bessel_j(0, x), bessel_y(0, x)) == pytest.approx(amp, rel=5.0 / x)
            assert bessel_i(0, x, scaled=True) == pytest.approx(
                1.0 / math.sqrt(2 * math.pi * x), rel=5.0 / x)
            assert bessel_k(0, x, scaled=True) == pytest.approx(
                math.sqrt(math.pi / (2 * x)), rel=5.0 / x)

    def test_switchover_agreement(self):
        xj = np.array([_JY_SWITCH])
        vs, _ = _j_series(0, xj)
        va, _ = _jy_asymptotic(0, xj, "j")
        assert abs(vs[0] - va[0]) <= 1e-9 * math.sqrt(2 / (math.pi * _JY_SWITCH))
        xi = np.array([_I_SWITCH])
        vs, _ = _i_series(0, xi, scaled=False)
        va, _ = _ik_asymptotic(0, xi, "i", scaled=False)
        assert abs(vs[0] - va[0]) <= 1e-9 * abs(vs[0])

    def test_overflow_flag(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            v = bessel_i(0, 800.0)
        assert v == math.inf
        assert any(issubclass(w.category, OverflowFlag) for w in caught)
        assert np.isfinite(bessel_i(0, 800.0, scaled=True))

    def test_vectorized(self):
        xs = np.geomspace(0.1, 60.0, 17)
        arr = bessel_k(1, xs)
        assert arr.shape == xs.shape
        for x, v in zip(xs, arr):
            assert v == bessel_k(1, float(x))
