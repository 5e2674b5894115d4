"""Coefficient families and rearranged / asymptotic evaluators.

Coefficients whose defining formulas are rational-in-parameters (sigma_k, the
A_k list, the g_k polynomials, the fixed C_k list) are kept exact when the
inputs are ints or Fractions and fall back to complex arithmetic otherwise.
The asymptotic forms at the bottom combine those coefficients with the
digamma leading term; their truncation error decays in inverse powers of n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .complexfn import POLE_TOL, digamma, gamma_ratio
from .errors import DomainError, InvalidParameterError, PoleError, WrongBranchError
from .params import NEGATIVE_INTEGER, ParamSet, classify, seq_factors

__all__ = [
    "CoefficientTable",
    "sigma_coeffs",
    "c0",
    "a_coeffs",
    "c_coeffs",
    "g_poly",
    "lambda_series",
    "remainder_bound",
    "asym_log",
    "asym_neg_int",
    "rearranged_tail",
]

Number = Union[int, float, complex, Fraction]

# Inverse-power coefficients of S_n(1/2,1/2;1) past the digamma and constant
# terms; the sum enters with alternating sign (-1)^k.
_C_LIST = (
    Fraction(3, 4),
    Fraction(7, 64),
    Fraction(-3, 128),
    Fraction(-91, 8192),
    Fraction(75, 8192),
    Fraction(641, 131072),
)

# Inverse-power coefficients of lambda_n at (1/2, 1/2), k = 1..5.
_LAMBDA_HALF = (
    Fraction(-1, 4),
    Fraction(1, 32),
    Fraction(1, 128),
    Fraction(-5, 2048),
    Fraction(-23, 8192),
)


@dataclass(frozen=True)
class CoefficientTable:
    """A coefficient family; values[i] is the coefficient of index k = i+1."""

    kind: str
    params: tuple | None
    values: tuple


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _coerce_pair(a: Number, b: Number):
    """Return (a, b) as Fractions when both are exact, else as complex."""
    if _is_exact(a) and _is_exact(b):
        return Fraction(a), Fraction(b)
    return complex(a), complex(b)


def _numeric(x) -> complex:
    return complex(float(x)) if isinstance(x, Fraction) else complex(x)


def _check_positive_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}")
    return value


def sigma_coeffs(a: Number, b: Number, K: int) -> CoefficientTable:
    """sigma_k = sum_{r<k} (1/(a+r) + 1/(b+r) - 1/(r+1)) for k = 1..K."""
    _check_positive_int(K, "K")
    av, bv = _coerce_pair(a, b)
    values = []
    acc = av * 0
    for r in range(K):
        for v in (av + r, bv + r):
            bad = (v == 0) if isinstance(v, Fraction) else (abs(v) < POLE_TOL)
            if bad:
                raise PoleError(f"sigma coefficient pole: parameter + {r} = 0")
        acc = acc + 1 / (av + r) + 1 / (bv + r) - Fraction(1, r + 1)
        values.append(acc)
    return CoefficientTable(kind="sigma", params=(a, b), values=tuple(values))


def c0(a: Number, b: Number) -> complex:
    """(Gamma(a+b)/(Gamma(a)Gamma(b))) * (psi(1) - psi(a) - psi(b))."""
    av, bv = _numeric(a), _numeric(b)
    pref = gamma_ratio([av + bv], [av, bv])
    return pref * (digamma(1.0) - digamma(av) - digamma(bv))


def _a_formulas(a, b):
    a1 = a * b - a - b
    a2 = ((a - 1) * (b - 1) * (2 * a + 2 * b + a * b) - 4 * a * b) / 4
    a3 = ((a - 1) * (b - 1) * (6 * (2 * a * a + 2 * b * b - a - b)
          + a * b * (8 * a + 8 * b + 2 * a * b + 5))
          - 36 * a * b * (a + b - 1)) / 36
    return a1, a2, a3


def a_coeffs(a: Number, b: Number) -> CoefficientTable:
    """The three printed inverse-power coefficients of the logarithmic case."""
    av, bv = _coerce_pair(a, b)
    return CoefficientTable(kind="A", params=(a, b), values=_a_formulas(av, bv))


def c_coeffs() -> CoefficientTable:
    return CoefficientTable(kind="C", params=None, values=_C_LIST)


def g_poly(k: int, h: Number):
    """Shifted-expansion polynomials g_1..g_3; exact for exact h."""
    if k not in (1, 2, 3):
        raise InvalidParameterError(f"k must be 1, 2, or 3, got {k!r}")
    hv = Fraction(h) if _is_exact(h) else h
    if k == 1:
        return (4 * hv - 3) / 4
    if k == 2:
        return (96 * hv * hv - 144 * hv + 43) / 192
    return (128 * hv ** 3 - 288 * hv * hv + 172 * hv - 21) / 384


def lambda_series(a: Number, b: Number, n: int, order: int) -> complex:
    """Truncated inverse-power estimate of lambda_n.

    The (1/2, 1/2) pair has five printed coefficients; the general pair only
    two.  Orders beyond the printed depth raise DomainError rather than
    silently extrapolating.
    """
    _check_positive_int(n, "n")
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise InvalidParameterError(f"order must be >= 0, got {order!r}")
    av, bv = _numeric(a), _numeric(b)
    if av == 0.5 and bv == 0.5:
        if order > len(_LAMBDA_HALF):
            raise DomainError(f"order {order} exceeds the known depth "
                              f"{len(_LAMBDA_HALF)} for (1/2, 1/2)")
        total = 1.0 + 0.0j
        for k in range(1, order + 1):
            total += float(_LAMBDA_HALF[k - 1]) / float(n) ** k
        return total
    if order > 2:
        raise DomainError(f"order {order} exceeds the known depth 2 for "
                          "general parameters")
    total = 1.0 + 0.0j
    if order >= 1:
        total -= av * bv / n
    if order >= 2:
        total += av * bv * (av + bv - 1 + av * bv) / (2.0 * n * n)
    return total


def remainder_bound(n: int, M: int) -> float:
    """Upper bound on the truncation remainder of the order-M Landau form.

    Equals (4/pi^2) Gamma(M+1/2)^2 Gamma(n-M)/Gamma(n), which decays like
    n^(-M); see the scaling check bound(2n,M)/bound(n,M) -> 2^(-M).
    """
    _check_positive_int(n, "n")
    _check_positive_int(M, "M")
    if n <= M:
        raise DomainError(f"need n > M, got n = {n}, M = {M}")
    value = gamma_ratio([n - M, M + 0.5, M + 0.5], [n])
    return 4.0 / math.pi ** 2 * value.real


def asym_log(a: Number, b: Number, n: int, K: int) -> complex:
    """Inverse-power estimate of the partial sum in the case c = a + b.

    (Gamma(a+b)/(Gamma(a)Gamma(b))) psi(n+a+b) + c_0(a,b)
    + (Gamma(a+b)/(Gamma(a)Gamma(b))) sum_{k<=K} (-1)^(k-1) A_k / n^k.
    """
    _check_positive_int(n, "n")
    if not isinstance(K, int) or isinstance(K, bool) or not 0 <= K <= 3:
        raise DomainError(f"K must be in 0..3, got {K!r}")
    av, bv = _numeric(a), _numeric(b)
    pref = gamma_ratio([av + bv], [av, bv])
    A = _a_formulas(av, bv)
    corr = 0.0 + 0.0j
    for k in range(1, K + 1):
        corr += (-1) ** (k - 1) * A[k - 1] / float(n) ** k
    return pref * digamma(n + av + bv) + c0(av, bv) + pref * corr


def asym_neg_int(p: ParamSet, n: int, K: int) -> complex:
    """Inverse-power estimate of the partial sum when s = -m.

    Finite inverse-factorial sum plus ((-1)^m/m!) Gamma(c)/(Gamma(c-a)Gamma(c-b))
    times the logarithmic bracket psi(n+a+b) + psi(1) - psi(a) - psi(b)
    + sum (-1)^(k-1) A_k/n^k.  The bracket's constant is psi(1)-psi(a)-psi(b),
    i.e. c_0(a,b) carried over with the prefactor Gamma(a)Gamma(b)/Gamma(a+b).
    """
    _check_positive_int(n, "n")
    if not isinstance(K, int) or isinstance(K, bool) or not 0 <= K <= 3:
        raise DomainError(f"K must be in 0..3, got {K!r}")
    cls = classify(p.a, p.b, p.c)
    if cls.kind != NEGATIVE_INTEGER:
        raise WrongBranchError(
            f"asym_neg_int needs a nondegenerate negative-integer excess, "
            f"got {cls.kind}"
        )
    m = cls.m
    a, b, c = p.a, p.b, p.c
    term = 1.0 + 0.0j
    finite = term
    for k in range(m - 1):
        term = term * (c - a + k) * (c - b + k) / ((n + c + k) * (1 - m + k))
        finite += term
    first = finite * gamma_ratio([n + a, n + b, c], [n, n + c, a, b]) / m
    A = _a_formulas(a, b)
    bracket = digamma(n + a + b) + digamma(1.0) - digamma(a) - digamma(b)
    for k in range(1, K + 1):
        bracket += (-1) ** (k - 1) * A[k - 1] / float(n) ** k
    sign = -1.0 if m % 2 else 1.0
    second = sign * gamma_ratio([c], [c - a, c - b, m + 1]) * bracket
    return first + second


def rearranged_tail(a: Number, b: Number, n: int, M: int) -> complex:
    """Single-sum form of the double tail sum, to relative O(n^(-M-1)):

    sum_{r=1}^{K-1} (-1)^(r-1) (a)_r (b)_r / (r (n+a+b)_r (n-1)...(n-r)),
    K = floor((M+1)/2).  At (1/2, 1/2) the denominator products collapse to
    (n^2-1^2)...(n^2-r^2).
    """
    _check_positive_int(n, "n")
    _check_positive_int(M, "M")
    K = (M + 1) // 2
    if n <= K:
        raise DomainError(f"need n > K = {K}, got n = {n}")
    av, bv = _numeric(a), _numeric(b)
    w = n + av + bv
    total = 0.0 + 0.0j
    poch = 1.0 + 0.0j      # (a)_r (b)_r / (n+a+b)_r
    falling = 1.0          # (n-1)(n-2)...(n-r)
    for r in range(1, K):
        poch = poch * (av + r - 1) * (bv + r - 1) / (w + r - 1)
        falling *= n - r
        total += (-1) ** (r - 1) * poch / (r * falling)
    return total
