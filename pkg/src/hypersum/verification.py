"""Runnable property suite behind the ``verify`` subcommand.

Each check measures one advertised guarantee of the package and returns a
CheckResult; run_all executes the whole battery.  Checks whose targets sit at
or below the roundoff floor of a double-precision build (the printed
truncation errors of the two partial-sum expansions, the depth-6 decay order
of the Landau inverse-power estimate) re-evaluate the relevant expansion in
extended precision so the measurement resolves the formula rather than the
arithmetic; everything else runs on the shipped double-precision routines.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import coeffs, engine, landau, oracle
from .complexfn import digamma, gamma
from .errors import DomainError
from .params import ParamSet, _nonpos_int_distance

DEFAULT_SEED = 20260815

# correctly rounded double of Euler's constant
_EULER = 0.5772156649015329

# published absolute truncation errors of the two expansions; parameters kept
# as rationals (or rational pairs for complex values) so each consumer can
# materialize them at its own working precision
LOG_ROWS = (
    ((Fraction(1, 3), Fraction(2, 3)), 40, (1.711e-5, 9.618e-8, 9.845e-10)),
    ((Fraction(3, 2), Fraction(1, 2)), 50, (2.616e-4, 4.954e-6, 9.922e-8)),
    (((Fraction(1, 2), Fraction(1)), Fraction(1, 4)), 100,
     (1.545e-5, 1.291e-7, 1.227e-9)),
)
NEG_ROWS = (
    ((Fraction(4, 3), Fraction(1, 3), Fraction(-7, 3)), 40,
     (9.820e-5, 1.601e-6, 2.812e-8)),
    ((Fraction(3, 2), Fraction(-1, 4), Fraction(1, 4)), 50,
     (9.654e-6, 6.888e-7, 4.141e-11)),
    (((Fraction(3, 4), Fraction(1)), (Fraction(1, 4), Fraction(1)),
      (Fraction(-2), Fraction(2))), 100, (6.556e-5, 9.752e-7, 1.520e-8)),
)


def as_mp(x):
    """Materialize a rational (or rational-pair) row entry at current dps."""
    if isinstance(x, tuple):
        return mp.mpc(as_mp(x[0]), as_mp(x[1]))
    return mp.mpf(x.numerator) / x.denominator


def as_complex(x) -> complex:
    if isinstance(x, tuple):
        return complex(float(x[0]), float(x[1]))
    return complex(float(x))


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _result(name: str, start: float, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, ok, detail, time.perf_counter() - start)


def _lsq_slope(xs, ys) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = [math.log(float(x)) for x in xs]
    ly = [math.log(float(y)) for y in ys]
    mx = sum(lx) / len(lx)
    my = sum(ly) / len(ly)
    num = sum((u - mx) * (v - my) for u, v in zip(lx, ly))
    den = sum((u - mx) ** 2 for u in lx)
    return num / den


# ---------------------------------------------------------------------------
# extended-precision instruments (mirror the double-precision formulas)

def _psum_mp(a, b, c, n):
    tot = mp.mpf(1)
    t = mp.mpf(1)
    for k in range(n - 1):
        t = t * (a + k) * (b + k) / ((c + k) * (k + 1))
        tot += t
    return tot


def _a_list_mp(a, b):
    a1 = a * b - a - b
    a2 = ((a - 1) * (b - 1) * (2 * a + 2 * b + a * b) - 4 * a * b) / 4
    a3 = ((a - 1) * (b - 1) * (6 * (2 * a * a + 2 * b * b - a - b)
          + a * b * (8 * a + 8 * b + 2 * a * b + 5))
          - 36 * a * b * (a + b - 1)) / 36
    return (a1, a2, a3)


def _c0_mp(a, b):
    return mp.gamma(a + b) / (mp.gamma(a) * mp.gamma(b)) * (
        mp.digamma(1) - mp.digamma(a) - mp.digamma(b))


def _asym_log_mp(a, b, n, K):
    pref = mp.gamma(a + b) / (mp.gamma(a) * mp.gamma(b))
    acc = mp.digamma(n + a + b)
    A = _a_list_mp(a, b)
    for k in range(1, K + 1):
        acc += (-1) ** (k - 1) * A[k - 1] / mp.mpf(n) ** k
    return pref * acc + _c0_mp(a, b)


def _asym_neg_mp(a, b, c, n, K):
    s = c - a - b
    m = int(mp.nint(-mp.re(s)))
    omega = mp.gamma(n + a) * mp.gamma(n + b) / (mp.gamma(n) * mp.gamma(n + c))
    first = mp.mpf(0)
    for k in range(m):
        first += (mp.rf(c - a, k) * mp.rf(c - b, k)
                  / (mp.rf(n + c, k) * mp.rf(1 - m, k)))
    first *= omega * mp.gamma(c) / (m * mp.gamma(a) * mp.gamma(b))
    A = _a_list_mp(a, b)
    bracket = mp.digamma(n + a + b) + mp.digamma(1) - mp.digamma(a) - mp.digamma(b)
    for k in range(1, K + 1):
        bracket += (-1) ** (k - 1) * A[k - 1] / mp.mpf(n) ** k
    second = ((-1) ** m / mp.factorial(m) * mp.gamma(c)
              / (mp.gamma(c - a) * mp.gamma(c - b)) * bracket)
    return first + second


# ---------------------------------------------------------------------------
# checks

def check_table_errors() -> CheckResult:
    """Reproduce the 18 printed truncation errors of the two expansions.

    Measured at 50 digits: the smallest printed error is ~1e-13 relative to
    the partial sum it belongs to, below what any double-precision assembly
    of the estimate can resolve.  The shipped double routines are held to the
    extended build separately.
    """
    start = time.perf_counter()
    worst = 0.0
    worst_cell = ""
    cross = 0.0
    with mp.workdps(50):
        for (pa, pb), n, printed in LOG_ROWS:
            a, b = as_mp(pa), as_mp(pb)
            ref = _psum_mp(a, b, a + b, n)
            for K in (1, 2, 3):
                est = _asym_log_mp(a, b, n, K)
                err = float(abs(est - ref))
                dev = abs(err - printed[K - 1]) / printed[K - 1]
                if dev > worst:
                    worst, worst_cell = dev, f"log row a={complex(a):.4g} K={K}"
                d = coeffs.asym_log(as_complex(pa), as_complex(pb), n, K)
                cross = max(cross, float(abs(d - est) / (1 + abs(est))))
        for (pa, pb, pc), n, printed in NEG_ROWS:
            a, b, c = as_mp(pa), as_mp(pb), as_mp(pc)
            ref = _psum_mp(a, b, c, n)
            p = ParamSet(as_complex(pa), as_complex(pb), as_complex(pc))
            for K in (1, 2, 3):
                est = _asym_neg_mp(a, b, c, n, K)
                err = float(abs(est - ref))
                dev = abs(err - printed[K - 1]) / printed[K - 1]
                if dev > worst:
                    worst, worst_cell = dev, f"neg row c={complex(c):.4g} K={K}"
                d = coeffs.asym_neg_int(p, n, K)
                cross = max(cross, float(abs(d - est) / (1 + abs(est))))
    ok = worst < 0.01 and cross < 1e-12
    detail = (f"18 cells: worst deviation from printed error {worst:.2%} "
              f"({worst_cell}); double vs extended build {cross:.1e}")
    return _result("table_errors", start, ok, detail)


def _draw_param(rng: random.Random) -> complex:
    while True:
        if rng.random() < 0.3:
            z = complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        else:
            z = complex(rng.uniform(-5.0, 5.0), 0.0)
        if abs(z) <= 5.0 and _nonpos_int_distance(z) >= 0.1:
            return z


def check_engine_vs_oracle(seed: int = DEFAULT_SEED,
                           cases: int = 500) -> CheckResult:
    """Random generic-branch sums against the extended-precision oracle."""
    start = time.perf_counter()
    rng = random.Random(seed)
    worst_rel = 0.0
    worst_at = ""
    worst_ratio = 0.0
    made = 0
    while made < cases:
        a = _draw_param(rng)
        b = _draw_param(rng)
        c = _draw_param(rng)
        if _nonpos_int_distance(c - a) < 0.1 or _nonpos_int_distance(c - b) < 0.1:
            continue
        s = c - a - b
        if abs(s - round(s.real)) < 1e-4:
            continue  # keep clear of the integer-excess branch boundaries
        made += 1
        p = ParamSet(a, b, c)
        for n in (5, 20, 100):
            rep = engine.eval_auto(p, n)
            ref = oracle.partial_sum_ref(a, b, c, n)
            err = oracle.compare(rep.value, ref)
            if err.rel_err > worst_rel:
                worst_rel = err.rel_err
                worst_at = f"a={a:.3g} b={b:.3g} c={c:.3g} n={n}"
            ratio = err.abs_err / max(rep.est_error, 5e-324)
            worst_ratio = max(worst_ratio, ratio)
    ok = worst_rel <= 1e-10 and worst_ratio <= 1.0
    detail = (f"{cases} sets x 3 indices: worst relative error {worst_rel:.2e} "
              f"(bar 1e-10) at {worst_at}; worst true-error/estimate ratio "
              f"{worst_ratio:.2f}")
    return _result("engine_vs_oracle", start, ok, detail)


def check_landau_agreement() -> CheckResult:
    """Cross-route agreement of the Landau constant evaluators.

    The depth-10 rearranged route is only defined one step above index 10 and
    its own remainder bound there (~3e-7) sits far above the shared bar, so
    this check reports the gap instead of hiding that cell.
    """
    start = time.perf_counter()
    ok = True
    notes = []
    g0 = landau.landau_direct(0)
    g1 = landau.landau_direct(1)
    if g0 != 1.0 or abs(g1 - 1.25) > 1e-15:
        ok = False
        notes.append(f"endpoint identities broke: G0={g0!r} G1={g1!r}")
    bar = 1e-11
    worst = 0.0
    worst_at = ""
    worst_rest = 0.0
    for g_index in (1, 5, 10, 50, 100):
        vals = {
            "direct": landau.landau_direct(g_index),
            "watson": landau.landau_watson(g_index),
            "series": landau.landau_ck(g_index),
        }
        s_index = g_index + 1
        if s_index > 10:
            vals["rearranged"] = landau.landau_theorem3(s_index, 10)[0]
        else:
            try:
                landau.landau_theorem3(s_index, 10)
                ok = False
                notes.append(f"depth-10 rearrangement accepted index {s_index}")
            except DomainError:
                pass
        names = sorted(vals)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                x, y = vals[names[i]], vals[names[j]]
                rel = abs(x - y) / max(abs(x), abs(y))
                if rel > worst:
                    worst = rel
                    worst_at = f"{names[i]}/{names[j]} at index {g_index}"
                at_edge = g_index == 10 and "rearranged" in (names[i], names[j])
                if not at_edge:
                    worst_rest = max(worst_rest, rel)
    if worst > bar:
        ok = False
    detail = (f"worst pairwise gap {worst:.2e} ({worst_at}) against bar 1e-11; "
              f"excluding the depth-10 route at its validity edge (index 10) "
              f"the worst gap is {worst_rest:.2e}")
    if notes:
        detail += "; " + "; ".join(notes)
    return _result("landau_agreement", start, ok, detail)


def check_remainder_bound() -> CheckResult:
    """Truncated rearrangement: true error under its bound, bound decay ~ depth."""
    start = time.perf_counter()
    ok = True
    parts = []
    for n, M in ((51, 5), (101, 8), (201, 10)):
        val, bound = landau.landau_theorem3(n, M)
        true_err = oracle.compare(val, oracle.landau_ref(n - 1)).abs_err
        slope = math.log2(coeffs.remainder_bound(2 * n, M)
                          / coeffs.remainder_bound(n, M))
        if true_err > bound or abs(slope + M) > 0.3:
            ok = False
        parts.append(f"(n={n},M={M}): err={true_err:.1e}<=bound={bound:.1e}, "
                     f"doubling slope {slope:+.2f}")
    return _result("remainder_bound", start, ok, "; ".join(parts))


def check_coefficient_tables() -> CheckResult:
    """Exact rational identities across the coefficient families."""
    start = time.perf_counter()
    ok = True
    notes = []
    half = Fraction(1, 2)
    golden_sigma = (Fraction(3), Fraction(23, 6), Fraction(43, 10),
                    Fraction(647, 140), Fraction(6131, 1260),
                    Fraction(70171, 13860))
    if coeffs.sigma_coeffs(half, half, 6).values != golden_sigma:
        ok = False
        notes.append("sigma(1/2,1/2) mismatch")
    golden_c = (Fraction(3, 4), Fraction(7, 64), Fraction(-3, 128),
                Fraction(-91, 8192), Fraction(75, 8192),
                Fraction(641, 131072))
    if coeffs.c_coeffs().values != golden_c:
        ok = False
        notes.append("C-family mismatch")
    a_vals = coeffs.a_coeffs(half, half).values
    if any(a_vals[k] != -golden_c[k] for k in range(3)):
        ok = False
        notes.append("A(1/2,1/2) != -C")
    for k in (1, 2, 3):
        for i in range(0, 13):
            h = Fraction(i, 8)
            if coeffs.g_poly(k, h) != (-1) ** k * coeffs.g_poly(k, Fraction(3, 2) - h):
                ok = False
                notes.append(f"g_{k} shift symmetry broke at h={h}")
    detail = ("sigma/C/A golden values and g shift symmetry verified in exact "
              "rationals" if ok else "; ".join(notes))
    return _result("coefficient_tables", start, ok, detail)


def check_degenerate_conjecture(seed: int = DEFAULT_SEED,
                                cases: int = 50) -> CheckResult:
    """Random degenerate sets against the oracle (conjectured closed form)."""
    start = time.perf_counter()
    rng = random.Random(seed)
    worst = 0.0
    worst_at = ""
    for _ in range(cases):
        m = rng.randint(1, 4)
        p_int = rng.randint(1, m)
        while True:
            other = rng.uniform(0.1, 4.75)
            if abs(other - round(other)) >= 0.1:
                break
        if rng.random() < 0.5:
            a, b = float(p_int), other
        else:
            a, b = other, float(p_int)
        c = a + b - m
        pset = ParamSet(a, b, c)
        for n in (3, 10, 50):
            rep = engine.eval_conjectured(pset, n)
            rel = oracle.compare(rep.value, oracle.partial_sum_ref(a, b, c, n)).rel_err
            if rel > worst:
                worst = rel
                worst_at = f"a={a:.3g} b={b:.3g} c={c:.3g} n={n}"
    ok = worst <= 1e-10
    detail = (f"{cases} degenerate sets x 3 indices: worst relative error "
              f"{worst:.2e} (bar 1e-10) at {worst_at}")
    return _result("degenerate_conjecture", start, ok, detail)


def check_asymptotic_orders() -> CheckResult:
    """Decay orders of the truncated expansions match their first omitted term."""
    start = time.perf_counter()
    ok = True
    parts = []
    # logarithmic-case expansion, order -(K+1)
    ns = (40, 80, 160)
    refs = {n: oracle.partial_sum_ref(1.0 / 3.0, 2.0 / 3.0, 1.0, n) for n in ns}
    for K in (1, 2, 3):
        errs = [oracle.compare(coeffs.asym_log(1.0 / 3.0, 2.0 / 3.0, n, K),
                               refs[n]).abs_err for n in ns]
        slope = _lsq_slope(ns, errs)
        if abs(slope + (K + 1)) > 0.2:
            ok = False
        parts.append(f"log K={K}: slope {slope:+.2f}")
    # depth-6 inverse-power estimate of the Landau sequence, order -7;
    # its double-precision error is already sub-roundoff at these indices,
    # so the expansion is rebuilt at 40 digits from the exact coefficients
    c_exact = coeffs.c_coeffs().values
    with mp.workdps(40):
        sn = (50, 100, 200)
        errs = []
        for n in sn:
            est = (mp.digamma(n + 1) + mp.euler + 4 * mp.log(2)) / mp.pi
            for k in range(1, 7):
                ck = c_exact[k - 1]
                est += ((-1) ** k * mp.mpf(ck.numerator)
                        / (ck.denominator * mp.pi * mp.mpf(n) ** k))
            errs.append(abs(est - oracle.landau_ref(n - 1).value))
        slope = _lsq_slope(sn, errs)
    if abs(slope + 7) > 0.3:
        ok = False
    parts.append(f"landau depth-6: slope {slope:+.2f}")
    # shifted-log estimate with three corrections, order -4
    gn = (50, 100, 200)
    errs = [oracle.compare(landau.landau_nemes(n, 1.0, 3),
                           oracle.landau_ref(n)).abs_err for n in gn]
    slope = _lsq_slope(gn, errs)
    if abs(slope + 4) > 0.3:
        ok = False
    parts.append(f"shifted-log K=3: slope {slope:+.2f}")
    return _result("asymptotic_orders", start, ok, "; ".join(parts))


def check_kernel_properties(seed: int = DEFAULT_SEED,
                            points: int = 10_000) -> CheckResult:
    """Recurrence and conjugation identities of the gamma/digamma kernel."""
    start = time.perf_counter()
    rng = random.Random(seed)
    worst_g = 0.0
    worst_d = 0.0
    conj_ok = True
    for _ in range(points):
        while True:
            z = complex(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0))
            if _nonpos_int_distance(z) >= 0.1:
                break
        g1 = gamma(z + 1)
        rel = abs(g1 - z * gamma(z)) / abs(g1)
        worst_g = max(worst_g, rel)
        d1 = digamma(z + 1)
        derr = abs(d1 - digamma(z) - 1.0 / z) / (1.0 + abs(d1))
        worst_d = max(worst_d, derr)
        zc = z.conjugate()
        if gamma(zc) != gamma(z).conjugate() or digamma(zc) != digamma(z).conjugate():
            conj_ok = False
    psi1 = abs(digamma(1.0).real + _EULER)
    ok = worst_g <= 1e-12 and worst_d <= 1e-12 and conj_ok and psi1 <= 1e-13
    detail = (f"{points} points: worst gamma recurrence {worst_g:.1e}, worst "
              f"digamma recurrence {worst_d:.1e} (bars 1e-12); conjugation "
              f"{'exact' if conj_ok else 'BROKEN'}; |psi(1)+euler| = {psi1:.1e}")
    return _result("kernel_properties", start, ok, detail)


def run_all(seed: int = DEFAULT_SEED, cases: int = 500) -> list[CheckResult]:
    return [
        check_table_errors(),
        check_engine_vs_oracle(seed, cases),
        check_landau_agreement(),
        check_remainder_bound(),
        check_coefficient_tables(),
        check_degenerate_conjecture(seed),
        check_asymptotic_orders(),
        check_kernel_properties(seed),
    ]
