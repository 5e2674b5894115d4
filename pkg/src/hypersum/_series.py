"""Tail-controlled summation of the package's convergent series.

All series here have terms that eventually decay like k^(-d) with d linked to
the summation index n, so a truncation tail is estimated as
|t_k| * k/(d-1) (the integral comparison).  Accumulation is compensated
(Neumaier) per component, which keeps the roundoff floor at ~eps times the
peak term magnitude rather than eps times the term count.

Stop rule: three consecutive terms whose estimated tail is below
rel_tol * |partial sum|.  A single-term test misfires when one term passes
near a zero of a complex Pochhammer factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergentSeriesError, InvalidParameterError

__all__ = ["SeriesResult", "sum_hyp3f2", "sum_psi_kernel", "sum_alt_kernel"]

_EPS = 2.0 ** -52
# Safety factor on the first-omitted-term tail estimate.
_TAIL_SAFETY = 10.0
_CONSECUTIVE_BELOW = 3


class _CompensatedSum:
    """Neumaier-compensated accumulator for complex values."""

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self) -> None:
        self._re = 0.0
        self._im = 0.0
        self._cre = 0.0
        self._cim = 0.0

    def add(self, z: complex) -> None:
        x = z.real
        t = self._re + x
        if abs(self._re) >= abs(x):
            self._cre += (self._re - t) + x
        else:
            self._cre += (x - t) + self._re
        self._re = t
        y = z.imag
        t = self._im + y
        if abs(self._im) >= abs(y):
            self._cim += (self._im - t) + y
        else:
            self._cim += (y - t) + self._im
        self._im = t

    @property
    def total(self) -> complex:
        return complex(self._re + self._cre, self._im + self._cim)


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    est_error: float
    hit_max: bool


def _tail_estimate(term_abs: float, k: int, decay: float) -> float:
    # sum_{j>=k} (k/j)^decay ~ k/(decay-1) terms' worth of the current term
    if decay <= 1.0:
        return math.inf
    return term_abs * max(1.0, k / (decay - 1.0))


def _run(term_abs_first: float, step, rel_tol: float, max_terms: int,
         decay: float, start_k: int, first_term: complex) -> SeriesResult:
    """Shared accumulation loop; `step(k)` returns the term for index k+1."""
    acc = _CompensatedSum()
    acc.add(first_term)
    peak = term_abs_first
    below = 0
    k = start_k
    hit_max = False
    tail = _tail_estimate(term_abs_first, max(k, 1), decay)
    drift = 0.0
    while True:
        if k - start_k + 1 >= max_terms:
            hit_max = True
            break
        term = step(k)
        if term == 0.0:
            # multiplicative updates: an exact zero terminates the series;
            # it contributed nothing, so it is not counted
            tail = 0.0
            break
        k += 1
        acc.add(term)
        t_abs = abs(term)
        if t_abs > peak:
            peak = t_abs
        # recurrence drift on term k grows like eps*k; weight by |term|
        drift += t_abs * (k - start_k)
        tail = _tail_estimate(t_abs, k, decay)
        if tail <= rel_tol * abs(acc.total):
            below += 1
            if below >= _CONSECUTIVE_BELOW:
                break
        else:
            below = 0
    value = acc.total
    est = _TAIL_SAFETY * tail + 4.0 * _EPS * peak + 8.0 * _EPS * drift
    return SeriesResult(value=value, terms_used=k - start_k + 1,
                        est_error=est, hit_max=hit_max)


def _check_tol(rel_tol: float, max_terms: int) -> None:
    if not (0.0 < rel_tol < 1.0):
        raise InvalidParameterError(f"rel_tol must be in (0, 1), got {rel_tol!r}")
    if not isinstance(max_terms, int) or max_terms < 1:
        raise InvalidParameterError(f"max_terms must be >= 1, got {max_terms!r}")


def _near_nonpos_int(z: complex, tol: float = 1e-12) -> bool:
    k = round(z.real)
    return k <= 0 and abs(z - k) <= tol


def sum_hyp3f2(num, den, rel_tol: float = 1e-15,
               max_terms: int = 1_000_000) -> SeriesResult:
    """Sum_k (n1)_k (n2)_k (n3)_k / ((d1)_k (d2)_k k!) at unit argument.

    Requires positive real parametric excess d1+d2-n1-n2-n3 unless a
    numerator parameter is a nonpositive integer (terminating sum).
    """
    _check_tol(rel_tol, max_terms)
    n1, n2, n3 = (complex(v) for v in num)
    d1, d2 = (complex(v) for v in den)
    for v in (d1, d2):
        if _near_nonpos_int(v):
            raise InvalidParameterError(
                f"denominator parameter {v!r} is a nonpositive integer"
            )
    excess = d1 + d2 - n1 - n2 - n3
    terminating = any(_near_nonpos_int(v, 1e-300) for v in (n1, n2, n3))
    if excess.real <= 0.0 and not terminating:
        raise DivergentSeriesError(
            f"series excess {excess!r} has nonpositive real part"
        )
    t = 1.0 + 0.0j

    def step(k: int) -> complex:
        nonlocal t
        t = t * (n1 + k) * (n2 + k) * (n3 + k) / ((d1 + k) * (d2 + k) * (k + 1))
        return t

    return _run(1.0, step, rel_tol, max_terms,
                decay=excess.real + 1.0, start_k=0, first_term=1.0 + 0.0j)


def sum_psi_kernel(a, b, w, rel_tol: float = 1e-15,
                   max_terms: int = 1_000_000) -> SeriesResult:
    """Sum_{k>=0} (a)_k (b)_k / ((w)_k k!) * {psi(w+k)+psi(1+k)-psi(a+k)-psi(b+k)}.

    The digamma values are advanced by their recurrence, so each term costs
    four reciprocals.  The bracket decays like (w-a-b+1)/k, giving overall
    term decay k^-(Re(w-a-b)+2).
    """
    from .complexfn import digamma

    _check_tol(rel_tol, max_terms)
    a = complex(a)
    b = complex(b)
    w = complex(w)
    br = digamma(w) + digamma(1.0) - digamma(a) - digamma(b)
    t = 1.0 + 0.0j

    def step(k: int) -> complex:
        nonlocal t, br
        t = t * (a + k) * (b + k) / ((w + k) * (k + 1))
        br = br + 1.0 / (w + k) + 1.0 / (1.0 + k) - 1.0 / (a + k) - 1.0 / (b + k)
        return t * br

    first = br
    return _run(abs(first), step, rel_tol, max_terms,
                decay=(w - a - b).real + 2.0, start_k=0, first_term=first)


def sum_alt_kernel(a, b, w, rel_tol: float = 1e-15,
                   max_terms: int = 1_000_000) -> SeriesResult:
    """Sum_{k>=1} (a)_k (b)_k / ((w)_k k!) * {h_k - sigma_k} with
    h_k = sum_{r<k} 1/(w+r) and sigma_k = sum_{r<k} (1/(a+r)+1/(b+r)-1/(r+1)).

    The bracket tends to a nonzero constant, so terms decay one power slower
    than the psi-kernel form: k^-(Re(w-a-b)+1).
    """
    _check_tol(rel_tol, max_terms)
    a = complex(a)
    b = complex(b)
    w = complex(w)
    t = a * b / w
    h = 1.0 / w
    s = 1.0 / a + 1.0 / b - 1.0

    def step(k: int) -> complex:
        nonlocal t, h, s
        t = t * (a + k) * (b + k) / ((w + k) * (k + 1))
        h = h + 1.0 / (w + k)
        s = s + 1.0 / (a + k) + 1.0 / (b + k) - 1.0 / (k + 1)
        return t * (h - s)

    first = t * (h - s)
    return _run(abs(first), step, rel_tol, max_terms,
                decay=(w - a - b).real + 1.0, start_k=1, first_term=first)
