"""Landau constants G_n by independent routes.

G_n is the n-th partial sum of the squared central-binomial weights
sum_{k<=n} (Gamma(k+1/2)/(k! sqrt(pi)))^2, equivalently S_{n+1}(1/2,1/2;1).
Besides the direct sum this module evaluates two convergent series (a
digamma-weighted one and a single-sum variant), the theorem-grade rearranged
form with an a-priori remainder bound, and three fixed-depth asymptotic
estimates.

Indexing: landau_direct / landau_watson / landau_ck / the fixed asymptotics
take the index of the constant itself.  landau_theorem3 and landau_asymptotic
take the partial-sum index and estimate the constant one below it; the CLI
converts so that all methods answer for the same constant.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import coeffs
from ._series import _run, sum_psi_kernel
from .complexfn import digamma, gamma_ratio
from .engine import Tolerance
from .errors import DomainError, InvalidParameterError

__all__ = [
    "landau_direct",
    "landau_watson",
    "landau_ck",
    "landau_theorem3",
    "landau_asymptotic",
    "landau_watson_asymptotic",
    "landau_nemes",
]

_DEFAULT_TOL = Tolerance()
_MAX_DIRECT_N = 1_000_000
_MAX_THEOREM_M = 30
_PI = math.pi
_LOG4 = 4.0 * math.log(2.0)


def _check_index(n, name: str = "n", minimum: int = 0) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise InvalidParameterError(
            f"{name} must be an integer >= {minimum}, got {n!r}")
    return n


def _euler_gamma() -> float:
    return -digamma(1.0).real


def landau_direct(n: int) -> float:
    """Direct sum of the defining series; exact up to summation roundoff."""
    _check_index(n)
    if n > _MAX_DIRECT_N:
        raise InvalidParameterError(f"n must be <= {_MAX_DIRECT_N}, got {n}")
    total = 0.0
    comp = 0.0
    t = 1.0
    for k in range(n + 1):
        if k:
            r = (k - 0.5) / k
            t *= r * r
        fresh = total + t
        if abs(total) >= t:
            comp += (total - fresh) + t
        else:
            comp += (t - fresh) + total
        total = fresh
    return total + comp


def landau_watson(n: int, tol: Tolerance = _DEFAULT_TOL) -> float:
    """Digamma-weighted convergent series for G_n.

    Prefactor Gamma(n+3/2)^2/(pi Gamma(n+1) Gamma(n+2)) times the
    four-digamma kernel at (1/2, 1/2, n+2).  For very small n the kernel
    decays too slowly to meet tol within max_terms; the direct sum is
    returned instead.
    """
    _check_index(n)
    ker = sum_psi_kernel(0.5, 0.5, n + 2.0, tol.rel_tol, tol.max_terms)
    if ker.hit_max:
        return landau_direct(n)
    pref = gamma_ratio([n + 1.5, n + 1.5], [n + 1.0, n + 2.0]).real / _PI
    return pref * ker.value.real


def landau_ck(n: int, tol: Tolerance = _DEFAULT_TOL) -> float:
    """Single-sum convergent form: digamma head minus a weighted tail.

    (1/pi)(psi(n+3/2) + gamma + 4 log 2) minus (1/pi) sum_{k>=1}
    (1/2)_k^2 / (k k! (n+3/2)_k).  Falls back to the direct sum when the
    tail cannot meet tol within max_terms (small n).
    """
    _check_index(n)
    w = n + 1.5
    t = 0.25 / w

    def step(k: int) -> float:
        nonlocal t
        t = t * (k + 0.5) ** 2 * k / ((k + 1.0) ** 2 * (w + k))
        return t

    res = _run(abs(t), step, tol.rel_tol, tol.max_terms,
               decay=n + 2.5, start_k=1, first_term=t)
    if res.hit_max:
        return landau_direct(n)
    head = (digamma(w).real + _euler_gamma() + _LOG4) / _PI
    return head - res.value.real / _PI


def landau_theorem3(n: int, M: int):
    """Rearranged finite form for S_n(1/2,1/2;1) = G_{n-1}, with a bound.

    value = (1/pi) psi(n+1) + c_0 + (1/pi) sum_{r<K} (-1)^(r-1) (1/2)_r^2 /
    (r (n^2-1^2)...(n^2-r^2)) - (lambda_n/pi) sum_{k<M} (1/2)_k^2 sigma_k /
    ((n+1)_k k!), K = floor((M+1)/2).  Returns (value, error_bound); the
    bound is the a-priori remainder bound, which decays like n^(-M).
    """
    _check_index(n, minimum=1)
    _check_index(M, "M", minimum=1)
    if M > _MAX_THEOREM_M:
        raise DomainError(f"M must be <= {_MAX_THEOREM_M}, got {M}")
    K = (M + 1) // 2
    if n <= K or n <= M:
        raise DomainError(f"need n > K = {K} and n > M = {M}, got n = {n}")
    value = digamma(n + 1.0).real / _PI + coeffs.c0(0.5, 0.5).real
    nn = float(n) * float(n)
    poch_sq = 1.0
    prod = 1.0
    rsum = 0.0
    for r in range(1, K):
        poch_sq *= (r - 0.5) ** 2
        prod *= nn - r * r
        rsum += (-1.0) ** (r - 1) * poch_sq / (r * prod)
    value += rsum / _PI
    if M >= 2:
        sigma = coeffs.sigma_coeffs(Fraction(1, 2), Fraction(1, 2), M - 1)
        lam = gamma_ratio([n + 0.5, n + 0.5], [float(n), n + 1.0]).real
        u = 0.25 / (n + 1.0)
        ksum = u * float(sigma.values[0])
        for k in range(1, M - 1):
            u = u * (k + 0.5) ** 2 / ((n + 1.0 + k) * (k + 1.0))
            ksum += u * float(sigma.values[k])
        value -= lam * ksum / _PI
    return value, coeffs.remainder_bound(n, M)


def landau_asymptotic(n: int, K: int) -> float:
    """Inverse-power estimate of S_n(1/2,1/2;1) = G_{n-1}, depth K <= 6."""
    _check_index(n, minimum=1)
    if not isinstance(K, int) or isinstance(K, bool) or not 0 <= K <= 6:
        raise InvalidParameterError(f"K must be in 0..6, got {K!r}")
    c_list = coeffs.c_coeffs().values
    total = digamma(n + 1.0).real / _PI + coeffs.c0(0.5, 0.5).real
    for k in range(1, K + 1):
        total += (-1.0) ** k * float(c_list[k - 1]) / (_PI * float(n) ** k)
    return total


def landau_watson_asymptotic(n: int) -> float:
    """Three-term log estimate of G_n; remainder is O(n^-3)."""
    _check_index(n)
    u = n + 1.0
    return ((math.log(u) + _euler_gamma() + _LOG4) / _PI
            - 1.0 / (4.0 * _PI * u) + 5.0 / (192.0 * _PI * u * u))


def landau_nemes(n: int, h: float = 1.0, K: int = 3) -> float:
    """Shifted log estimate of G_n with polynomial corrections g_k(h)."""
    _check_index(n, minimum=1)
    if not isinstance(K, int) or isinstance(K, bool) or not 0 <= K <= 3:
        raise InvalidParameterError(f"K must be in 0..3, got {K!r}")
    h = float(h)
    if not 0.0 < h < 1.5:
        raise DomainError(f"h must lie in (0, 3/2), got {h!r}")
    u = n + h
    total = (math.log(u) + _euler_gamma() + _LOG4) / _PI
    for k in range(1, K + 1):
        total -= float(coeffs.g_poly(k, h)) / (_PI * u ** k)
    return total
