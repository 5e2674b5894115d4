"""Self-contained complex gamma-family kernel in double precision.

Provides ``log_gamma`` / ``gamma`` / ``digamma`` for complex arguments, plus
rising factorials and overflow-safe products of gamma ratios built on top of
them.  The implementation is deliberately free of external special-function
libraries: arguments are lifted by the functional recurrences until the real
part reaches the asymptotic zone, where a Stirling-type series with exact
Bernoulli-number coefficients finishes the job.  Arguments in the lower half
plane are handled by conjugation, which makes the conjugate-symmetry identities
exact at the representation level.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence, Union

from .errors import InvalidParameterError, PoleError

__all__ = [
    "ComplexVal",
    "BernoulliSeq",
    "POLE_TOL",
    "bernoulli_numbers",
    "log_gamma",
    "gamma",
    "digamma",
    "pochhammer",
    "gamma_ratio",
]

ComplexVal = complex
BernoulliSeq = "tuple[Fraction, ...]"
Number = Union[int, float, complex, Fraction]

# Distance to a nonpositive integer below which an argument counts as a pole.
POLE_TOL = 1e-12

# Real part beyond which the asymptotic series is trusted; with 12 series
# terms the truncation error at Re z = 12 is ~1e-21, far below double eps.
_ASYMPTOTIC_SHIFT = 12.0
_SERIES_TERMS = 12

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
# exp() overflows above ~709.78 and underflows to zero below ~-745.1.
_EXP_MAX = 709.78
_EXP_MIN = -745.1

_MAX_BERNOULLI = 64


def bernoulli_numbers(count: int) -> tuple[Fraction, ...]:
    """First ``count`` even-index Bernoulli numbers B_2, B_4, ... exactly.

    Uses the defining recurrence sum(C(m+1, j) * B_j, j=0..m) = 0 in rational
    arithmetic.  ``count`` is capped at 64; beyond that the numbers grow
    factorially and nothing in this package needs them.
    """
    if not isinstance(count, int) or count < 1:
        raise InvalidParameterError("count must be a positive integer")
    if count > _MAX_BERNOULLI:
        raise InvalidParameterError(f"count must be <= {_MAX_BERNOULLI}")
    top = 2 * count
    full = [Fraction(1)]
    for m in range(1, top + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * full[j]
        full.append(-acc / (m + 1))
    return tuple(full[2 * k] for k in range(1, count + 1))


def _stirling_log_coeffs(terms: int) -> tuple[float, ...]:
    # B_{2k} / (2k (2k-1)) for the log-gamma series, as floats.
    bern = bernoulli_numbers(terms)
    return tuple(float(b / (2 * k * (2 * k - 1))) for k, b in enumerate(bern, start=1))


def _stirling_psi_coeffs(terms: int) -> tuple[float, ...]:
    # B_{2k} / (2k) for the digamma series, as floats.
    bern = bernoulli_numbers(terms)
    return tuple(float(b / (2 * k)) for k, b in enumerate(bern, start=1))


_LOG_COEFFS = _stirling_log_coeffs(_SERIES_TERMS)
_PSI_COEFFS = _stirling_psi_coeffs(_SERIES_TERMS)


def _as_complex(z: Number, name: str = "z") -> complex:
    if isinstance(z, Fraction):
        z = float(z)
    w = complex(z)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise InvalidParameterError(f"{name} must be finite, got {w!r}")
    return w


def _pole_distance(z: complex) -> float:
    """Distance from z to the nearest nonpositive integer (inf if Re z > 0.5)."""
    k = round(z.real)
    if k > 0:
        return math.inf
    return abs(z - k)


def is_near_pole(z: Number, tol: float = POLE_TOL) -> bool:
    """True when z lies within ``tol`` of a pole of the gamma function."""
    return _pole_distance(_as_complex(z)) <= tol


def _in_lower_half(w: complex) -> bool:
    # -0.0 counts as lower: the lift loses the zero's sign at the first
    # w += 1.0, so letting it through the upper path would pick branch-cut
    # signs inconsistently and break the conjugate pairing.
    return w.imag < 0.0 or (w.imag == 0.0 and math.copysign(1.0, w.imag) < 0.0)


def _log_gamma_asymptotic(w: complex) -> complex:
    # Stirling series, valid for Re w >= _ASYMPTOTIC_SHIFT.
    u = 1.0 / w
    u2 = u * u
    s = 0.0 + 0.0j
    for c in reversed(_LOG_COEFFS):
        s = (s + c) * u2
    return (w - 0.5) * cmath.log(w) - w + _HALF_LOG_TWO_PI + s / u


def _log_gamma_upper(z: complex) -> complex:
    # Principal log-gamma for Im z >= 0 (or real z).  Each recurrence step
    # stays off the negative real axis when Im z != 0, so summing principal
    # logs introduces no spurious 2*pi*i jumps; for real negative z the +i*pi
    # contributions of the negative factors encode the sign of gamma.
    shift = 0.0 + 0.0j
    w = z
    while w.real < _ASYMPTOTIC_SHIFT:
        shift += cmath.log(w)
        w += 1.0
    return _log_gamma_asymptotic(w) - shift


def log_gamma(z: Number) -> complex:
    """Principal branch of log Gamma(z) for complex z off the poles.

    Raises PoleError within ``POLE_TOL`` of a nonpositive integer.
    """
    w = _as_complex(z)
    if _pole_distance(w) <= POLE_TOL:
        raise PoleError(f"log_gamma pole at z = {w!r}")
    if _in_lower_half(w):
        return _log_gamma_upper(w.conjugate()).conjugate()
    return _log_gamma_upper(w)


def gamma(z: Number) -> complex:
    """Gamma(z) = exp(log_gamma(z)) with explicit exponent-range checks."""
    lg = log_gamma(z)
    if lg.real > _EXP_MAX:
        raise OverflowError(f"gamma overflow: Re log_gamma = {lg.real:.6g}")
    if lg.real < _EXP_MIN:
        raise OverflowError(f"gamma underflow: Re log_gamma = {lg.real:.6g}")
    return cmath.exp(lg)


def _digamma_upper(z: complex) -> complex:
    shift = 0.0 + 0.0j
    w = z
    while w.real < _ASYMPTOTIC_SHIFT:
        shift += 1.0 / w
        w += 1.0
    u = 1.0 / w
    u2 = u * u
    s = 0.0 + 0.0j
    for c in reversed(_PSI_COEFFS):
        s = (s + c) * u2
    return cmath.log(w) - 0.5 * u - s - shift


def digamma(z: Number) -> complex:
    """psi(z), the logarithmic derivative of gamma, for complex z off the poles."""
    w = _as_complex(z)
    if _pole_distance(w) <= POLE_TOL:
        raise PoleError(f"digamma pole at z = {w!r}")
    if _in_lower_half(w):
        return _digamma_upper(w.conjugate()).conjugate()
    return _digamma_upper(w)


# Above this order the rising factorial goes through log-gamma ratios instead
# of a bare product; 64 keeps the product path exact for terminating cases.
_POCHHAMMER_PRODUCT_MAX = 64


def _pochhammer_product(z: complex, count: int) -> complex:
    acc = 1.0 + 0.0j
    for j in range(count):
        acc *= z + j
        if acc == 0.0:
            return 0.0 + 0.0j
    if not (math.isfinite(acc.real) and math.isfinite(acc.imag)):
        raise OverflowError(f"pochhammer overflow at ({z!r})_{count}")
    return acc


def pochhammer(z: Number, k: int) -> complex:
    """Rising factorial (z)_k = z (z+1) ... (z+k-1), with (z)_0 = 1.

    Terminating cases (z at a nonpositive integer with k large enough to cross
    zero) return an exact 0.  Large orders route through gamma ratios.
    """
    if not isinstance(k, int) or k < 0:
        raise InvalidParameterError("k must be a nonnegative integer")
    w = _as_complex(z)
    if k == 0:
        return 1.0 + 0.0j
    if k <= _POCHHAMMER_PRODUCT_MAX:
        return _pochhammer_product(w, k)
    try:
        return gamma_ratio([w + k], [w])
    except PoleError:
        # z sits at/near a nonpositive integer: the product crosses an exact
        # zero (or a value dominated by the near-zero factor), so form it
        # directly.
        return _pochhammer_product(w, k)


def _log1p_c(u: complex) -> complex:
    # Principal log(1+u) without the 1+u rounding loss for small |u|.
    w = 1.0 + u
    if w == 1.0:
        return u
    return cmath.log(w) * (u / (w - 1.0))


def _stirling_tail(w: complex) -> complex:
    # sum B_2k / (2k(2k-1) w^(2k-1)) for Re w >= _ASYMPTOTIC_SHIFT.
    u = 1.0 / w
    u2 = u * u
    s = 0.0 + 0.0j
    for c in reversed(_LOG_COEFFS):
        s = (s + c) * u2
    return s / u


def _log_gamma_diff_upper(z1: complex, z2: complex) -> complex:
    # log_gamma(z1) - log_gamma(z2) for Im z1, Im z2 >= 0, formed without
    # building the two large logs: the Stirling main terms are combined as
    #   (w1-w2) Log w2 + (w1-1/2) Log(w1/w2) - (w1-w2),
    # which stays O(|z1-z2| log|w|) instead of O(|w| log|w|).
    shift = 0.0 + 0.0j
    w1 = z1
    while w1.real < _ASYMPTOTIC_SHIFT:
        shift -= cmath.log(w1)
        w1 += 1.0
    w2 = z2
    while w2.real < _ASYMPTOTIC_SHIFT:
        shift += cmath.log(w2)
        w2 += 1.0
    u = (w1 - w2) / w2
    if abs(u) <= 0.25:
        ratio_log = _log1p_c(u)
    else:
        # well-separated arguments: no cancellation to protect against
        ratio_log = cmath.log(w1) - cmath.log(w2)
    delta = w1 - w2
    return (
        delta * cmath.log(w2)
        + (w1 - 0.5) * ratio_log
        - delta
        + _stirling_tail(w1)
        - _stirling_tail(w2)
        + shift
    )


def _log_gamma_diff(z1: complex, z2: complex) -> complex:
    """log_gamma(z1) - log_gamma(z2), accurate even when both are huge."""
    for z in (z1, z2):
        if _pole_distance(z) <= POLE_TOL:
            raise PoleError(f"gamma_ratio pole at argument {z!r}")
    if z1.imag >= 0.0 and z2.imag >= 0.0:
        return _log_gamma_diff_upper(z1, z2)
    if z1.imag <= 0.0 and z2.imag <= 0.0:
        return _log_gamma_diff_upper(z1.conjugate(), z2.conjugate()).conjugate()
    # Opposite half-planes: reflect the lower argument up and patch with the
    # imaginary part, which stays O(|Im z| log|z|) while the real part (the
    # piece that would lose precision to cancellation) is shared exactly:
    # log_gamma(conj z) = conj log_gamma(z), so only 2i Im log_gamma moves.
    if z1.imag < 0.0:
        d = _log_gamma_diff_upper(z1.conjugate(), z2)
        return d.conjugate() - 2.0j * _log_gamma_upper(z2).imag
    d = _log_gamma_diff_upper(z2.conjugate(), z1)
    return 2.0j * _log_gamma_upper(z1).imag - d.conjugate()


def gamma_ratio(numerators: Sequence[Number], denominators: Sequence[Number]) -> complex:
    """prod Gamma(numerators) / prod Gamma(denominators) in log space.

    Arguments are paired off numerator-against-denominator and each pair is
    differenced analytically, so that ratios like Gamma(n+a)/Gamma(n) keep
    full relative precision for n up to ~1e6 instead of losing the rounding
    of two ~n log n sized logs.
    """
    nums = [_as_complex(v, "numerator") for v in numerators]
    dens = [_as_complex(v, "denominator") for v in denominators]
    total = 0.0 + 0.0j
    paired = min(len(nums), len(dens))
    for i in range(paired):
        total += _log_gamma_diff(nums[i], dens[i])
    for v in nums[paired:]:
        total += log_gamma(v)
    for v in dens[paired:]:
        total -= log_gamma(v)
    if total.real > _EXP_MAX:
        raise OverflowError(f"gamma_ratio overflow: Re log = {total.real:.6g}")
    if total.real < _EXP_MIN:
        raise OverflowError(f"gamma_ratio underflow: Re log = {total.real:.6g}")
    return cmath.exp(total)
