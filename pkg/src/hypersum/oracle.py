"""Extended-precision reference evaluator.

Computes trusted values of the quantities the rest of the package
approximates in double precision: raw term-by-term partial sums of the
hypergeometric series at unit argument, gamma and digamma values, and the
Landau constants.  Everything runs in mpmath arbitrary-precision arithmetic,
a code path fully independent of the double-precision kernel, so agreement
between the two is meaningful evidence rather than a tautology.

Requests are small tagged tuples, e.g. ``("partial_sum", a, b, c, n)``;
convenience wrappers build them.  The working precision carries ten guard
digits beyond what is reported.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral
from typing import Union

import mpmath as mp

from .errors import InvalidParameterError, PrecisionUnavailableError

__all__ = [
    "OracleValue",
    "ErrorReport",
    "DEFAULT_DIGITS",
    "default_digits",
    "oracle_eval",
    "partial_sum_ref",
    "gamma_ref",
    "digamma_ref",
    "landau_ref",
    "compare",
]

Number = Union[int, float, complex, Fraction]

DEFAULT_DIGITS = 40
_MIN_DIGITS = 30
_MAX_DIGITS = 100_000
_GUARD_DIGITS = 10
_MAX_PARTIAL_SUM_N = 100_000
_REQUEST_KINDS = ("partial_sum", "gamma", "digamma", "landau")


def default_digits() -> int:
    """Oracle precision: HYPERSUM_ORACLE_DIGITS when set, else 40."""
    raw = os.environ.get("HYPERSUM_ORACLE_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        digits = int(raw)
    except ValueError as exc:
        raise InvalidParameterError(
            f"HYPERSUM_ORACLE_DIGITS must be an integer, got {raw!r}"
        ) from exc
    return digits


@dataclass(frozen=True)
class OracleValue:
    """A reference value together with its request and stated precision."""

    value: mp.mpc
    digits: int
    request: tuple

    def as_complex(self) -> complex:
        return complex(float(mp.re(self.value)), float(mp.im(self.value)))


@dataclass(frozen=True)
class ErrorReport:
    """Deviation of a double-precision value from a reference value."""

    abs_err: float
    rel_err: float
    reference_precision: int


def _to_mp(x: Number, name: str):
    """Convert exactly: Fractions as rationals, floats as their binary value."""
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    if isinstance(x, Integral):
        return mp.mpf(int(x))
    if isinstance(x, complex):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise InvalidParameterError(f"{name} must be finite, got {x!r}")
        if x.imag == 0.0:
            return mp.mpf(x.real)
        return mp.mpc(x.real, x.imag)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise InvalidParameterError(f"{name} must be finite, got {x!r}")
        return mp.mpf(x)
    raise InvalidParameterError(f"{name} has unsupported type {type(x).__name__}")


def _check_digits(digits: int) -> None:
    if not isinstance(digits, Integral):
        raise InvalidParameterError("digits must be an integer")
    if digits < _MIN_DIGITS:
        raise InvalidParameterError(f"digits must be >= {_MIN_DIGITS}, got {digits}")
    if digits > _MAX_DIGITS:
        raise PrecisionUnavailableError(
            f"digits = {digits} exceeds the supported maximum {_MAX_DIGITS}"
        )


def _partial_sum_mp(a, b, c, n: int):
    # t_{k+1} = t_k (a+k)(b+k) / ((c+k)(k+1)); sum the first n terms.
    total = mp.mpf(1)
    term = mp.mpf(1)
    for k in range(n - 1):
        den = (c + k) * (k + 1)
        if den == 0:
            raise InvalidParameterError(
                f"series coefficient pole: c + {k} = 0 with c = {c}"
            )
        term = term * (a + k) * (b + k) / den
        total += term
    return total


def _landau_mp(n: int):
    # G_n = sum_{k<=n} t_k with t_0 = 1, t_{k+1} = t_k ((2k+1)/(2k+2))^2.
    total = mp.mpf(1)
    term = mp.mpf(1)
    for k in range(n):
        term = term * (2 * k + 1) ** 2 / mp.mpf((2 * k + 2) ** 2)
        total += term
    return total


def oracle_eval(request: tuple, digits: int | None = None) -> OracleValue:
    """Evaluate a tagged reference request at the given decimal precision.

    Requests: ("partial_sum", a, b, c, n) with 1 <= n <= 1e5;
    ("gamma", z); ("digamma", z); ("landau", n) with n >= 0.
    """
    if digits is None:
        digits = default_digits()
    _check_digits(digits)
    if not isinstance(request, tuple) or not request or request[0] not in _REQUEST_KINDS:
        raise InvalidParameterError(
            f"request must be a tuple tagged with one of {_REQUEST_KINDS}"
        )
    kind = request[0]
    with mp.workdps(digits + _GUARD_DIGITS):
        if kind == "partial_sum":
            if len(request) != 5:
                raise InvalidParameterError("partial_sum request takes (a, b, c, n)")
            a, b, c, n = request[1:]
            if not isinstance(n, Integral) or n < 1:
                raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
            if n > _MAX_PARTIAL_SUM_N:
                raise InvalidParameterError(
                    f"n = {n} exceeds the partial_sum limit {_MAX_PARTIAL_SUM_N}"
                )
            value = _partial_sum_mp(
                _to_mp(a, "a"), _to_mp(b, "b"), _to_mp(c, "c"), int(n)
            )
        elif kind == "landau":
            if len(request) != 2:
                raise InvalidParameterError("landau request takes (n,)")
            n = request[1]
            if not isinstance(n, Integral) or n < 0:
                raise InvalidParameterError(f"n must be >= 0, got {n!r}")
            value = _landau_mp(int(n))
        else:
            if len(request) != 2:
                raise InvalidParameterError(f"{kind} request takes (z,)")
            z = _to_mp(request[1], "z")
            value = mp.gamma(z) if kind == "gamma" else mp.digamma(z)
        return OracleValue(value=mp.mpc(value), digits=digits, request=request)


def partial_sum_ref(a: Number, b: Number, c: Number, n: int,
                    digits: int | None = None) -> OracleValue:
    return oracle_eval(("partial_sum", a, b, c, n), digits)


def gamma_ref(z: Number, digits: int | None = None) -> OracleValue:
    return oracle_eval(("gamma", z), digits)


def digamma_ref(z: Number, digits: int | None = None) -> OracleValue:
    return oracle_eval(("digamma", z), digits)


def landau_ref(n: int, digits: int | None = None) -> OracleValue:
    return oracle_eval(("landau", n), digits)


def compare(x: Number, ref: OracleValue) -> ErrorReport:
    """Absolute and relative deviation of x from the reference value."""
    with mp.workdps(ref.digits + _GUARD_DIGITS):
        xm = _to_mp(x, "x")
        abs_err = mp.fabs(xm - ref.value)
        mag = mp.fabs(ref.value)
        if mag == 0:
            rel = mp.mpf(0) if abs_err == 0 else mp.inf
        else:
            rel = abs_err / mag
        return ErrorReport(
            abs_err=float(abs_err),
            rel_err=float(rel),
            reference_precision=ref.digits,
        )
