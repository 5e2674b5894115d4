import math

import pytest

from hypersum.engine import (
    EvalReport,
    Tolerance,
    eval_auto,
    eval_conjectured,
    eval_generic,
    eval_log,
    eval_neg_int,
    eval_pos_int,
    f32_unit,
    leading_term,
)
from hypersum.errors import (
    DomainError,
    InvalidParameterError,
    WrongBranchError,
)
from hypersum.params import ParamSet


def rel(x, want):
    return abs(x - want) / abs(want)


class TestTolerance:
    def test_defaults(self):
        tol = Tolerance()
        assert tol.rel_tol == 1e-15
        assert tol.max_terms == 1_000_000

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            Tolerance(rel_tol=0.0)
        with pytest.raises(InvalidParameterError):
            Tolerance(max_terms=0)


class TestGeneric:
    def test_short_sum(self):
        p = ParamSet(2.0, 0.5, 4.25)  # s = 1.75
        rep = eval_generic(p, 7)
        assert rel(rep.value, 1.4583492161585467) < 1e-13
        assert rep.branch.kind == "generic"

    def test_longer_sum(self):
        p = ParamSet(2.0, 0.5, 4.25)
        rep = eval_generic(p, 30)
        assert rel(rep.value, 1.5131677836801687) < 1e-13

    def test_unit_index(self):
        rep = eval_generic(ParamSet(2.0, 0.5, 4.25), 1)
        assert rep.value == 1.0 + 0.0j
        assert rep.terms_used == 1
        assert rep.est_error == 0.0

    def test_vanishing_gauss_piece(self):
        # c - a a nonpositive integer: the closed term is exactly zero and
        # the correction series terminates
        p = ParamSet(2.0, 0.5, 1.0)
        assert rel(eval_generic(p, 3).value, 3.125) < 1e-13
        assert rel(eval_generic(p, 12).value, 18.052188873291016) < 1e-13

    def test_capped_series_is_flagged_and_covered(self):
        # s = 0.5: the correction series at n = 2 decays too slowly for the
        # default cap; the report must say so and the estimate must cover
        p = ParamSet(1.0, 1.0, 2.5)
        rep = eval_generic(p, 2)
        assert any("max_terms" in w for w in rep.warnings)
        assert abs(rep.value - 1.4) <= rep.est_error
        assert rep.est_error < 1e-9

    def test_wrong_branch_rejected(self):
        with pytest.raises(WrongBranchError):
            eval_generic(ParamSet(0.5, 0.5, 1.0), 5)

    def test_est_error_covers(self):
        p = ParamSet(0.75, 0.25, 2.6)
        rep = eval_generic(p, 20)
        from hypersum.oracle import compare, partial_sum_ref

        err = compare(rep.value, partial_sum_ref(0.75, 0.25, 2.6, 20))
        assert err.abs_err <= rep.est_error


class TestLog:
    def test_real_pair(self):
        p = ParamSet(1.0 / 3.0, 2.0 / 3.0, 1.0)
        rep = eval_log(p, 20)
        assert rel(rep.value, 1.8896625074153495) < 1e-13

    def test_complex_pair(self):
        p = ParamSet(0.5 + 1j, 0.25, 0.75 + 1j)
        rep = eval_log(p, 12)
        want = 1.7247741028331527 + 0.19346088408429105j
        assert rel(rep.value, want) < 1e-13

    def test_alternative_form_agrees(self):
        p = ParamSet(1.0 / 3.0, 2.0 / 3.0, 1.0)
        one = eval_log(p, 20, form="psi_series")
        two = eval_log(p, 20, form="alternative")
        assert rel(one.value, two.value.real) < 1e-13

    def test_bad_form_rejected(self):
        with pytest.raises(InvalidParameterError):
            eval_log(ParamSet(0.5, 0.5, 1.0), 5, form="fourier")

    def test_half_pair_is_pi_times_landau(self):
        from hypersum.landau import landau_direct

        rep = eval_log(ParamSet(0.5, 0.5, 1.0), 11)
        assert rel(rep.value.real, landau_direct(10)) < 1e-12


class TestPosInt:
    def test_finite_exact(self):
        p = ParamSet(1.75, 0.25, 4.0)  # s = 2
        rep = eval_pos_int(p, 9)
        assert rel(rep.value, 1.188784317163325) < 5e-14
        assert rep.terms_used == 2  # m-term closed sum

    def test_wrong_branch(self):
        with pytest.raises(WrongBranchError):
            eval_pos_int(ParamSet(0.5, 0.25, 1.5), 5)


class TestNegInt:
    def test_m1(self):
        p = ParamSet(1.5, -0.25, 0.25)  # s = -1
        rep = eval_neg_int(p, 5)
        assert rel(rep.value, -3.617588141025641) < 1e-12

    def test_m2(self):
        p = ParamSet(3.0, 0.5, 1.5)  # s = -2, not degenerate (a > m)
        rep = eval_neg_int(p, 6)
        assert rel(rep.value, 8.2043290043290042) < 1e-12

    def test_degenerate_routed_away(self):
        with pytest.raises(WrongBranchError) as info:
            eval_neg_int(ParamSet(1.0, 0.5, -0.5), 10)
        assert "eval_conjectured" in str(info.value)


class TestConjectured:
    def test_closed_value(self):
        p = ParamSet(1.0, 0.5, -0.5)  # s = -2, a = 1 <= m
        rep = eval_conjectured(p, 10)
        assert rel(rep.value, -80.0) < 1e-12
        assert "conjectural" in rep.warnings

    def test_wrong_branch(self):
        with pytest.raises(WrongBranchError):
            eval_conjectured(ParamSet(3.0, 0.5, 1.5), 6)


class TestAuto:
    def test_dispatch_matches_direct_calls(self):
        cases = (
            (ParamSet(2.0, 0.5, 4.25), 7, eval_generic),
            (ParamSet(1.0 / 3.0, 2.0 / 3.0, 1.0), 20, eval_log),
            (ParamSet(1.75, 0.25, 4.0), 9, eval_pos_int),
            (ParamSet(1.5, -0.25, 0.25), 5, eval_neg_int),
            (ParamSet(1.0, 0.5, -0.5), 10, eval_conjectured),
        )
        for p, n, fn in cases:
            assert eval_auto(p, n).value == fn(p, n).value

    def test_report_shape(self):
        rep = eval_auto(ParamSet(2.0, 0.5, 4.25), 7)
        assert isinstance(rep, EvalReport)
        assert isinstance(rep.terms_used, int)
        assert rep.est_error >= 0.0

    def test_near_integer_excess_warning_propagates(self):
        rep = eval_auto(ParamSet(0.5, 0.25, 1.75 + 1e-6), 10)
        assert any("near_integer_excess" in w for w in rep.warnings)
        from hypersum.oracle import compare, partial_sum_ref

        err = compare(rep.value, partial_sum_ref(0.5, 0.25, 1.75 + 1e-6, 10))
        assert err.abs_err <= rep.est_error

    def test_bad_n_rejected(self):
        with pytest.raises(InvalidParameterError):
            eval_auto(ParamSet(2.0, 0.5, 4.25), 0)
        with pytest.raises(InvalidParameterError):
            eval_auto(ParamSet(2.0, 0.5, 4.25), 2.5)


class TestF32Unit:
    def test_value_and_count(self):
        value, terms = f32_unit([0.5, 0.5, 1.0], [12.0, 1.75])
        assert rel(value, 1.0127632289039901) < 1e-14
        assert terms > 10

    def test_arity(self):
        with pytest.raises(InvalidParameterError):
            f32_unit([0.5, 0.5, 1.0, 2.0], [12.0, 1.75])


class TestLeadingTerm:
    def test_logarithmic(self):
        got = leading_term(ParamSet(1.0 / 3.0, 2.0 / 3.0, 1.0), 40)
        assert rel(got, 1.0168929173903911) < 1e-13

    def test_positive_excess_is_gauss_value(self):
        got = leading_term(ParamSet(2.0, 0.5, 4.25), 30)
        assert rel(got, 1.5194805194805139) < 1e-13

    def test_negative_excess(self):
        got = leading_term(ParamSet(1.5, -0.25, 0.25), 50)
        assert rel(got, -41.731342083703645) < 1e-13

    def test_tiny_real_excess_rejected(self):
        p = ParamSet(0.5, 0.5, 1.0 + 1e-12 + 0.5j)  # generic, Re s ~ 1e-12
        with pytest.raises(DomainError):
            leading_term(p, 40)

    def test_grows_like_log(self):
        p = ParamSet(0.5, 0.5, 1.0)
        l40 = leading_term(p, 40).real
        l80 = leading_term(p, 80).real
        assert (l80 - l40) == pytest.approx(math.log(2.0) / math.pi, rel=1e-12)
