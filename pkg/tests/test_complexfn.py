import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.complexfn import (
    POLE_TOL,
    bernoulli_numbers,
    digamma,
    gamma,
    gamma_ratio,
    is_near_pole,
    log_gamma,
    pochhammer,
)
from hypersum.errors import InvalidParameterError, PoleError

EULER = 0.5772156649015329


def dist_nonpos_int(z: complex) -> float:
    k = round(z.real)
    if k > 0:
        return abs(z)
    return abs(z - k) if abs(z - k) < abs(z) else abs(z)


# points kept off the pole set
strip = st.complex_numbers(min_magnitude=0, max_magnitude=20,
                           allow_nan=False, allow_infinity=False).filter(
    lambda z: dist_nonpos_int(z) >= 0.1)


class TestGamma:
    def test_integers(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-15)
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-15)
        assert gamma(8.0).real == pytest.approx(5040.0, rel=1e-14)

    def test_half(self):
        assert gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        # reflection-free negative half-integers
        assert gamma(-0.5).real == pytest.approx(-2 * math.sqrt(math.pi),
                                                 rel=1e-13)

    def test_complex_golden(self):
        got = gamma(1.5 + 2j)
        want = 0.16591510893899095 + 0.14946347326641948j
        assert abs(got - want) <= 1e-15 * abs(want) * 20

    def test_pole_raises(self):
        for z in (0.0, -1.0, -7.0, -3.0 + 1e-14j):
            with pytest.raises(PoleError):
                gamma(z)

    @settings(max_examples=200, deadline=None)
    @given(strip)
    def test_recurrence(self, z):
        lhs = gamma(z + 1)
        assert abs(lhs - z * gamma(z)) <= 1e-12 * abs(lhs)

    @settings(max_examples=200, deadline=None)
    @given(strip)
    def test_conjugation(self, z):
        assert gamma(z.conjugate()) == gamma(z).conjugate()


class TestLogGamma:
    def test_real_line(self):
        assert log_gamma(10.0).real == pytest.approx(math.lgamma(10.0),
                                                     rel=1e-15)
        assert log_gamma(0.25).real == pytest.approx(math.lgamma(0.25),
                                                     rel=1e-14)

    def test_exp_consistency(self):
        for z in (3.2 + 0.7j, 0.4 - 2.0j, -1.5 + 0.25j):
            assert abs(cmath.exp(log_gamma(z)) - gamma(z)) \
                <= 1e-12 * abs(gamma(z))


class TestDigamma:
    def test_euler(self):
        assert abs(digamma(1.0).real + EULER) <= 1e-13

    def test_half(self):
        want = -EULER - 2.0 * math.log(2.0)
        assert digamma(0.5).real == pytest.approx(want, rel=1e-14)

    def test_complex_golden(self):
        got = digamma(0.5 + 1j)
        want = -0.051761650994412545 + 1.5649405178158793j
        assert abs(got - want) <= 1e-14 * abs(want) * 10

    @settings(max_examples=200, deadline=None)
    @given(strip)
    def test_recurrence(self, z):
        lhs = digamma(z + 1)
        assert abs(lhs - digamma(z) - 1.0 / z) <= 1e-12 * (1.0 + abs(lhs))

    @settings(max_examples=200, deadline=None)
    @given(strip)
    def test_conjugation(self, z):
        assert digamma(z.conjugate()) == digamma(z).conjugate()


class TestPochhammer:
    def test_basic(self):
        assert pochhammer(1.0, 5) == pytest.approx(120.0, rel=1e-15)
        assert pochhammer(0.5, 0) == 1.0
        assert pochhammer(-3.0, 5) == 0.0  # terminates past a nonpositive int

    def test_matches_gamma_ratio(self):
        z = 1.25 + 0.5j
        want = gamma(z + 7) / gamma(z)
        assert abs(pochhammer(z, 7) - want) <= 1e-13 * abs(want)

    def test_negative_count_rejected(self):
        with pytest.raises(InvalidParameterError):
            pochhammer(1.0, -1)


class TestGammaRatio:
    def test_balanced_pair(self):
        # Gamma(41.5)^2 / (Gamma(41) Gamma(42)): all factors huge, ratio ~ 1
        got = gamma_ratio([41.5, 41.5], [41.0, 42.0])
        assert got.real == pytest.approx(0.99392114161570244, rel=1e-14)

    def test_mixed_signs(self):
        got = gamma_ratio([-7.0 / 3.0], [4.0 / 3.0, 1.0 / 3.0])
        want = gamma(-7.0 / 3.0) / (gamma(4.0 / 3.0) * gamma(1.0 / 3.0))
        assert abs(got - want) <= 1e-13 * abs(want)

    def test_overflow_safe(self):
        # individual factors overflow a double; the ratio does not
        got = gamma_ratio([300.25], [300.0])
        assert got.real == pytest.approx(4.1604907329492518, rel=1e-13)

    def test_pole_raises(self):
        with pytest.raises(PoleError):
            gamma_ratio([-2.0], [1.0])


class TestNearPole:
    def test_detection(self):
        assert is_near_pole(0.0)
        assert is_near_pole(-3.0 + 0.5 * POLE_TOL * 1j)
        assert not is_near_pole(0.5)
        assert not is_near_pole(-3.0 + 1e-6j)


class TestBernoulli:
    def test_even_index_values(self):
        from fractions import Fraction

        b = bernoulli_numbers(8)
        assert b[:4] == (Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42),
                         Fraction(-1, 30))
        assert b[7] == Fraction(-3617, 510)
