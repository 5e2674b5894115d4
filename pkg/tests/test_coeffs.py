import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.coeffs import (
    a_coeffs,
    asym_log,
    asym_neg_int,
    c0,
    c_coeffs,
    g_poly,
    lambda_series,
    rearranged_tail,
    remainder_bound,
    sigma_coeffs,
)
from hypersum.errors import DomainError, PoleError, WrongBranchError
from hypersum.params import ParamSet

HALF = Fraction(1, 2)

GOLDEN_SIGMA = (Fraction(3), Fraction(23, 6), Fraction(43, 10),
                Fraction(647, 140), Fraction(6131, 1260),
                Fraction(70171, 13860))
GOLDEN_C = (Fraction(3, 4), Fraction(7, 64), Fraction(-3, 128),
            Fraction(-91, 8192), Fraction(75, 8192), Fraction(641, 131072))


class TestSigma:
    def test_golden_half_pair(self):
        assert sigma_coeffs(HALF, HALF, 6).values == GOLDEN_SIGMA

    def test_exact_arithmetic_for_exact_inputs(self):
        values = sigma_coeffs(Fraction(1, 3), Fraction(1, 4), 4).values
        assert all(isinstance(v, Fraction) for v in values)

    def test_float_inputs_track_exact(self):
        exact = sigma_coeffs(Fraction(1, 3), Fraction(1, 4), 4).values
        approx = sigma_coeffs(1.0 / 3.0, 0.25, 4).values
        for e, g in zip(exact, approx):
            assert abs(complex(g) - float(e)) <= 1e-13 * abs(float(e))

    def test_pole_rejected(self):
        with pytest.raises(PoleError):
            sigma_coeffs(-2, HALF, 4)  # a + r hits zero at r = 2


class TestCZero:
    def test_half_pair(self):
        want = (0.5772156649015329 + 4.0 * math.log(2.0)) / math.pi
        assert c0(0.5, 0.5).real == pytest.approx(want, rel=1e-13)

    def test_symmetry(self):
        x, y = c0(0.75, 0.3), c0(0.3, 0.75)
        assert abs(x - y) <= 1e-13 * abs(x)


class TestAC:
    def test_a_half_pair_matches_negated_c(self):
        a_vals = a_coeffs(HALF, HALF).values
        assert tuple(a_vals) == tuple(-v for v in GOLDEN_C[:3])

    def test_c_golden(self):
        assert c_coeffs().values == GOLDEN_C


class TestG:
    def test_values_at_one(self):
        assert g_poly(1, 1) == Fraction(1, 4)
        assert g_poly(2, 1) == Fraction(-5, 192)
        assert g_poly(3, 1) == Fraction(-3, 128)

    @settings(max_examples=100, deadline=None)
    @given(st.fractions(min_value=-2, max_value=4))
    def test_shift_symmetry(self, h):
        for k in (1, 2, 3):
            assert g_poly(k, h) == (-1) ** k * g_poly(k, Fraction(3, 2) - h)

    def test_bad_k(self):
        from hypersum.errors import InvalidParameterError

        with pytest.raises(InvalidParameterError):
            g_poly(4, HALF)


class TestLambdaSeries:
    def test_half_pair_depth(self):
        got = lambda_series(0.5, 0.5, 10, 5)
        assert got.real == pytest.approx(1 - 1 / 40 + 1 / 3200 + 1 / 128000
                                         - 5 / 20480000 - 23 / 819200000,
                                         rel=1e-15)

    def test_half_pair_approaches_lambda(self):
        from hypersum.params import seq_factors

        lam = seq_factors(ParamSet(0.5, 0.5, 1.0), 50).lambda_n.real
        est = lambda_series(0.5, 0.5, 50, 5).real
        assert abs(est - lam) < 1e-11

    def test_general_pair_depth_two(self):
        got = lambda_series(1.0 / 3.0, 2.0 / 3.0, 40, 2)
        ab = 2.0 / 9.0
        want = 1 - ab / 40 + ab * (1.0 / 3.0 + 2.0 / 3.0 - 1 + ab) / 3200
        assert got.real == pytest.approx(want, rel=1e-15)

    def test_depth_caps(self):
        with pytest.raises(DomainError):
            lambda_series(0.5, 0.5, 10, 6)
        with pytest.raises(DomainError):
            lambda_series(0.25, 0.5, 10, 3)


class TestRemainderBound:
    def test_value(self):
        assert remainder_bound(51, 5) == pytest.approx(4.3672772935364033e-06,
                                                       rel=1e-10)

    def test_halving(self):
        ratio = remainder_bound(402, 5) / remainder_bound(201, 5)
        assert math.log2(ratio) == pytest.approx(-5.0, abs=0.2)

    def test_domain(self):
        with pytest.raises(DomainError):
            remainder_bound(10, 10)


class TestAsymLog:
    def test_against_frozen_sum(self):
        # S_20(1/3, 2/3; 1) = 1.8896625074153495
        for K, budget in ((1, 2e-4), (2, 2e-6), (3, 4e-8)):
            est = asym_log(1.0 / 3.0, 2.0 / 3.0, 20, K)
            assert abs(est - 1.8896625074153495) < budget

    def test_depth_cap(self):
        with pytest.raises(DomainError):
            asym_log(0.5, 0.5, 20, 4)


class TestAsymNegInt:
    def test_against_frozen_sum(self):
        p = ParamSet(1.5, -0.25, 0.25)  # s = -1
        # S_5(1.5, -0.25; 0.25) = -3.617588141025641
        est = asym_neg_int(p, 5, 3)
        assert abs(est - (-3.617588141025641)) < 2e-4

    def test_wrong_branch(self):
        with pytest.raises(WrongBranchError):
            asym_neg_int(ParamSet(0.5, 0.25, 1.5), 10, 2)


class TestRearrangedTail:
    # lambda_60 * (harmonic-weighted double tail) at (1/2,1/2), 50-digit run
    LAM_F = 6.9442033513811508e-05

    def test_matches_double_tail(self):
        got = rearranged_tail(0.5, 0.5, 60, 8)
        # the first omitted term has r = K = 4: ~ 2 ((1/2)_4)^2/4 * 60^-8
        assert abs(got - self.LAM_F) < 1.3e-13

    def test_deeper_is_closer(self):
        shallow = abs(rearranged_tail(0.5, 0.5, 60, 8) - self.LAM_F)
        deep = abs(rearranged_tail(0.5, 0.5, 60, 10) - self.LAM_F)
        assert deep < shallow / 50

    def test_domain(self):
        with pytest.raises(DomainError):
            rearranged_tail(0.5, 0.5, 4, 10)
