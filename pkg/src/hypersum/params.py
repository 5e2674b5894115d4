"""Parameter validation and branch classification.

The value of the excess s = c - a - b decides which expansion evaluates the
partial sum: generic s, the logarithmic case s = 0, positive-integer s (a
finite sum), negative-integer s (finite sum plus a psi-series), or the
degenerate negative-integer case where a or b is a positive integer <= m.
Also computes the prefactor ratios omega_n and lambda_n shared by all
branches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .complexfn import gamma_ratio
from .errors import InvalidParameterError

__all__ = [
    "INTEGER_TOL",
    "NEAR_INTEGER_WARN",
    "GENERIC",
    "LOGARITHMIC",
    "POSITIVE_INTEGER",
    "NEGATIVE_INTEGER",
    "DEGENERATE_NEG_INTEGER",
    "ParamSet",
    "ExcessClass",
    "SeqFactors",
    "classify",
    "seq_factors",
]

Number = Union[int, float, complex, Fraction]

# Distance within which a value counts as the integer it rounds to.  Inputs
# meant as exact rationals land within ~1e-15 of their value in double
# precision; 1e-9 gives margin without absorbing genuinely nearby parameters.
INTEGER_TOL = 1e-9
# Band [INTEGER_TOL, NEAR_INTEGER_WARN) around an integer excess: still the
# generic branch, but flagged, since its 1/s and gamma(s) factors cancel a
# divergence there and the cancellation costs precision.
NEAR_INTEGER_WARN = 1e-4

GENERIC = "generic"
LOGARITHMIC = "logarithmic"
POSITIVE_INTEGER = "positive_integer"
NEGATIVE_INTEGER = "negative_integer"
DEGENERATE_NEG_INTEGER = "degenerate_negative_integer"


def _as_complex(x: Number, name: str) -> complex:
    if isinstance(x, Fraction):
        x = float(x)
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidParameterError(f"{name} must be finite, got {z!r}")
    return z


def _nonpos_int_distance(z: complex) -> float:
    """Distance from z to the nearest nonpositive integer."""
    k = round(z.real)
    if k > 0:
        k = 0
    return abs(z - k)


@dataclass(frozen=True)
class ParamSet:
    """Validated parameter triple (a, b, c) of the series.

    None of a, b, c may lie within INTEGER_TOL of zero or a negative integer;
    at such points the series coefficients (or the sum itself) degenerate.
    """

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = _as_complex(getattr(self, name), name)
            object.__setattr__(self, name, value)
            if _nonpos_int_distance(value) < INTEGER_TOL:
                raise InvalidParameterError(
                    f"{name} = {value!r} is (within tolerance) zero or a "
                    "negative integer, which is excluded"
                )

    @property
    def s(self) -> complex:
        return self.c - self.a - self.b


@dataclass(frozen=True)
class ExcessClass:
    """Branch decision for an excess value, with conditioning warnings.

    kind is one of the module constants; m >= 1 for the integer kinds;
    p and which identify the degenerate parameter (which in {"a", "b"},
    a/b within tolerance of the positive integer p <= m).
    """

    kind: str
    m: int | None = None
    p: int | None = None
    which: str | None = None
    warnings: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class SeqFactors:
    omega_n: complex
    lambda_n: complex


def classify(a: Number, b: Number, c: Number) -> ExcessClass:
    """Classify the excess s = c-a-b of a (validated) parameter triple."""
    p = ParamSet(a, b, c)
    s = p.s
    warnings: list[str] = []
    for name, shifted in (("a", p.c - p.a), ("b", p.c - p.b)):
        dist = _nonpos_int_distance(shifted)
        if dist < INTEGER_TOL:
            warnings.append(f"gamma_pole_c_minus_{name}")
        elif dist < NEAR_INTEGER_WARN:
            warnings.append(f"near_gamma_pole_c_minus_{name}")

    m0 = round(s.real)
    dist = abs(s - m0)
    if dist >= INTEGER_TOL:
        if dist < NEAR_INTEGER_WARN:
            warnings.append("near_integer_excess")
        return ExcessClass(kind=GENERIC, warnings=tuple(warnings))
    if m0 == 0:
        return ExcessClass(kind=LOGARITHMIC, warnings=tuple(warnings))
    if m0 >= 1:
        return ExcessClass(kind=POSITIVE_INTEGER, m=m0, warnings=tuple(warnings))

    m = -m0
    # Degenerate when a or b sits at a positive integer p <= m.  The largest
    # such p is the tight choice: the conjectured sum's upper limit m-p then
    # matches where its numerator factors vanish anyway.
    best: tuple[int, str] | None = None
    for name, value in (("a", p.a), ("b", p.b)):
        k = round(value.real)
        if 1 <= k <= m and abs(value - k) < INTEGER_TOL:
            if best is None or k > best[0]:
                best = (k, name)
    if best is not None:
        return ExcessClass(
            kind=DEGENERATE_NEG_INTEGER,
            m=m,
            p=best[0],
            which=best[1],
            warnings=tuple(warnings),
        )
    return ExcessClass(kind=NEGATIVE_INTEGER, m=m, warnings=tuple(warnings))


def seq_factors(p: ParamSet, n: int) -> SeqFactors:
    """omega_n and lambda_n, the gamma-ratio prefactors of the expansions."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    omega = gamma_ratio([n + p.a, n + p.b], [n, n + p.c])
    lam = gamma_ratio([n + p.a, n + p.b], [n, n + p.a + p.b])
    return SeqFactors(omega_n=omega, lambda_n=lam)
