"""Branch dispatch and evaluation of the partial sums S_n(a, b; c).

Each eval_* routine implements one convergent rearrangement of the truncated
Gauss series at unit argument, selected by the integer character of the
parametric excess s = c - a - b; eval_auto routes on classify().  All series
are truncated by a shared Tolerance and reported with a first-omitted-term
error estimate.  The identity S_1 = 1 is returned directly in every branch:
at n = 1 the expansions converge too slowly to be worth running and the
value is exact anyway.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import coeffs
from ._series import sum_alt_kernel, sum_hyp3f2, sum_psi_kernel
from .complexfn import digamma, gamma_ratio, is_near_pole
from .errors import DomainError, InvalidParameterError, WrongBranchError
from .params import (DEGENERATE_NEG_INTEGER, GENERIC, INTEGER_TOL, LOGARITHMIC,
                     NEGATIVE_INTEGER, POSITIVE_INTEGER, ExcessClass, ParamSet,
                     classify, seq_factors)

__all__ = [
    "Tolerance",
    "EvalReport",
    "f32_unit",
    "eval_generic",
    "eval_log",
    "eval_pos_int",
    "eval_neg_int",
    "eval_conjectured",
    "eval_auto",
    "leading_term",
]

_EPS = 2.0 ** -52

# Relative accuracy floor of the double-precision gamma/digamma kernel in
# the working strip (measured worst case ~5e-14); every reported est_error
# includes this so kernel roundoff cannot escape the estimate.
_KERNEL_REL = 1e-13


def _roundoff(*magnitudes: float) -> float:
    """Kernel-accuracy floor on the assembled value; series recurrence
    drift is already inside each SeriesResult.est_error."""
    return _KERNEL_REL * sum(magnitudes)


@dataclass(frozen=True)
class Tolerance:
    """Truncation control: target relative term size and a hard term cap."""

    rel_tol: float = 1e-15
    max_terms: int = 1_000_000

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tol < 1.0:
            raise InvalidParameterError(
                f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if not isinstance(self.max_terms, int) or self.max_terms < 1:
            raise InvalidParameterError(
                f"max_terms must be a positive integer, got {self.max_terms!r}")


@dataclass(frozen=True)
class EvalReport:
    value: complex
    branch: ExcessClass
    terms_used: int
    est_error: float
    warnings: tuple = ()


_DEFAULT_TOL = Tolerance()


def _check_n(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    return n


def _require(cls: ExcessClass, kind: str, op: str) -> None:
    if cls.kind != kind:
        hint = ""
        if kind == NEGATIVE_INTEGER and cls.kind == DEGENERATE_NEG_INTEGER:
            hint = " (degenerate case: route to eval_conjectured)"
        raise WrongBranchError(f"{op} needs excess class {kind}, "
                               f"got {cls.kind}{hint}")


def _unit_report(cls: ExcessClass, extra: tuple = ()) -> EvalReport:
    return EvalReport(1.0 + 0.0j, cls, 1, 0.0, cls.warnings + extra)


def f32_unit(num, den, tol: Tolerance = _DEFAULT_TOL):
    """Partial 3F2(1) summer: returns (value, terms_used).

    A run that hits max_terms without meeting the stopping rule is detectable
    by terms_used == tol.max_terms; the eval_* callers flag it instead.
    """
    if len(num) != 3 or len(den) != 2:
        raise InvalidParameterError("f32_unit needs 3 numerator and 2 "
                                    "denominator parameters")
    res = sum_hyp3f2(tuple(num), tuple(den), tol.rel_tol, tol.max_terms)
    return res.value, res.terms_used


def eval_generic(p: ParamSet, n: int, tol: Tolerance = _DEFAULT_TOL) -> EvalReport:
    """Noninteger excess: closed Gauss piece minus a weighted 3F2(1) tail.

    When c-a or c-b sits at a nonpositive integer the Gauss piece is exactly
    zero (reciprocal-gamma pole) and the tail series terminates on its own;
    classification flags this with a gamma_pole warning rather than refusing.
    """
    cls = classify(p.a, p.b, p.c)
    _require(cls, GENERIC, "eval_generic")
    _check_n(n)
    if n == 1:
        return _unit_report(cls)
    a, b, c = p.a, p.b, p.c
    s = p.s
    if is_near_pole(c - a) or is_near_pole(c - b):
        gauss = 0.0 + 0.0j
    else:
        gauss = gamma_ratio([c, s], [c - a, c - b])
    series = sum_hyp3f2((c - a, c - b, 1.0 + 0.0j), (n + c, 1.0 + s),
                        tol.rel_tol, tol.max_terms)
    pref = gamma_ratio([n + a, n + b, c], [n, n + c, a, b]) / s
    tail = pref * series.value
    value = gauss - tail
    warnings = cls.warnings
    if series.hit_max:
        warnings = warnings + ("max_terms_reached",)
    est = (abs(pref) * series.est_error
           + _roundoff(abs(gauss), abs(tail)))
    return EvalReport(value, cls, series.terms_used, est, warnings)


def eval_log(p: ParamSet, n: int, tol: Tolerance = _DEFAULT_TOL,
             form: str = "psi_series") -> EvalReport:
    """Zero excess (c = a+b): digamma-weighted inverse factorial series.

    form="psi_series" evaluates the four-digamma bracket per term;
    form="alternative" splits off the psi(n+a+b) + c_0 head so the remaining
    bracket h_k - sigma_k tends to a constant.  The two agree to est_error.
    """
    cls = classify(p.a, p.b, p.c)
    _require(cls, LOGARITHMIC, "eval_log")
    _check_n(n)
    if form not in ("psi_series", "alternative"):
        raise InvalidParameterError(f"unknown form {form!r}")
    if n == 1:
        return _unit_report(cls)
    a, b = p.a, p.b
    w = n + a + b
    pref = gamma_ratio([a + b], [a, b])
    lam = seq_factors(p, n).lambda_n
    warnings = cls.warnings
    if form == "psi_series":
        ker = sum_psi_kernel(a, b, w, tol.rel_tol, tol.max_terms)
        value = lam * pref * ker.value
        est = (abs(lam * pref) * ker.est_error
               + _roundoff(abs(value)))
    else:
        ker = sum_alt_kernel(a, b, w, tol.rel_tol, tol.max_terms)
        head = pref * digamma(w) + coeffs.c0(a, b)
        tail = lam * pref * ker.value
        value = head + tail
        est = (abs(lam * pref) * ker.est_error
               + _roundoff(abs(head), abs(tail)))
    if ker.hit_max:
        warnings = warnings + ("max_terms_reached",)
    return EvalReport(value, cls, ker.terms_used, est, warnings)


def eval_pos_int(p: ParamSet, n: int) -> EvalReport:
    """Excess s = +m: exact finite inverse factorial sum of m terms."""
    cls = classify(p.a, p.b, p.c)
    _require(cls, POSITIVE_INTEGER, "eval_pos_int")
    _check_n(n)
    if n == 1:
        return _unit_report(cls)
    a, b, c = p.a, p.b, p.c
    m = cls.m
    w = n + a + b
    term = 1.0 + 0.0j
    total = term
    absum = 1.0
    for k in range(m - 1):
        term = term * (a + k) * (b + k) / ((w + k) * (k + 1))
        total += term
        absum += abs(term)
    pref = gamma_ratio([n + a, n + b, c, p.s], [n, w, c - a, c - b])
    value = pref * total
    est = _roundoff(abs(pref) * absum)
    return EvalReport(value, cls, m, est, cls.warnings)


def eval_neg_int(p: ParamSet, n: int, tol: Tolerance = _DEFAULT_TOL) -> EvalReport:
    """Excess s = -m, neither a nor b in {1..m}: finite sum plus psi-series."""
    cls = classify(p.a, p.b, p.c)
    _require(cls, NEGATIVE_INTEGER, "eval_neg_int")
    _check_n(n)
    if n == 1:
        return _unit_report(cls)
    a, b, c = p.a, p.b, p.c
    m = cls.m
    term = 1.0 + 0.0j
    finite = term
    absum = 1.0
    for k in range(m - 1):
        term = term * (c - a + k) * (c - b + k) / ((n + c + k) * (1 - m + k))
        finite += term
        absum += abs(term)
    pref1 = gamma_ratio([n + a, n + b, c], [n, n + c, a, b]) / m
    ker = sum_psi_kernel(a, b, n + a + b, tol.rel_tol, tol.max_terms)
    sign = -1.0 if m % 2 else 1.0
    pref2 = sign * gamma_ratio([n + a, n + b, c],
                               [n, n + a + b, c - a, c - b, m + 1])
    head = pref1 * finite
    tail = pref2 * ker.value
    value = head + tail
    warnings = cls.warnings
    if ker.hit_max:
        warnings = warnings + ("max_terms_reached",)
    est = (abs(pref2) * ker.est_error
           + _roundoff(abs(head), abs(tail), abs(pref1) * absum))
    return EvalReport(value, cls, m + ker.terms_used, est, warnings)


def eval_conjectured(p: ParamSet, n: int) -> EvalReport:
    """Degenerate s = -m with a or b a positive integer p <= m.

    Finite sum over k = 0..m-p whose numerator factors (a-m)_k (b-m)_k make
    the truncation self-enforcing; flagged conjectural, since this form rests
    on numerical evidence rather than proof.
    """
    cls = classify(p.a, p.b, p.c)
    _require(cls, DEGENERATE_NEG_INTEGER, "eval_conjectured")
    _check_n(n)
    if n == 1:
        return _unit_report(cls, ("conjectural",))
    a, b, c = p.a, p.b, p.c
    m = cls.m
    term = 1.0 + 0.0j
    total = term
    absum = 1.0
    for k in range(m - cls.p):
        term = term * (a - m + k) * (b - m + k) / ((n + c + k) * (1 - m + k))
        total += term
        absum += abs(term)
    pref = gamma_ratio([n + a, n + b, c], [n, n + c, a, b]) / m
    value = pref * total
    est = _roundoff(abs(pref) * absum)
    return EvalReport(value, cls, m - cls.p + 1, est,
                      cls.warnings + ("conjectural",))


def eval_auto(p: ParamSet, n: int, tol: Tolerance = _DEFAULT_TOL) -> EvalReport:
    """Route to the branch evaluator selected by the excess classification."""
    cls = classify(p.a, p.b, p.c)
    if cls.kind == GENERIC:
        return eval_generic(p, n, tol)
    if cls.kind == LOGARITHMIC:
        return eval_log(p, n, tol)
    if cls.kind == POSITIVE_INTEGER:
        return eval_pos_int(p, n)
    if cls.kind == NEGATIVE_INTEGER:
        return eval_neg_int(p, n, tol)
    return eval_conjectured(p, n)


def leading_term(p: ParamSet, n: int) -> complex:
    """Leading large-n behavior of the partial sum.

    Re s > 0: the Gauss value.  Re s < 0: Gamma(c) n^(-s) / ((-s) Gamma(a)
    Gamma(b)).  s = 0: (Gamma(a+b)/(Gamma(a)Gamma(b))) log n.  The
    oscillatory boundary Re s = 0 with s != 0 has no single leading term and
    is refused.
    """
    _check_n(n)
    cls = classify(p.a, p.b, p.c)
    a, b, c = p.a, p.b, p.c
    s = p.s
    if cls.kind == LOGARITHMIC:
        return gamma_ratio([a + b], [a, b]) * math.log(n)
    if cls.kind == GENERIC and abs(s.real) < INTEGER_TOL:
        raise DomainError("no single leading term when Re s = 0 with s != 0")
    if s.real > 0.0:
        return gamma_ratio([c, s], [c - a, c - b])
    growth = cmath.exp(-s * math.log(n))
    return gamma_ratio([c], [a, b]) * growth / (-s)
