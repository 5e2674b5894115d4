"""Command-line front end.

Subcommands: ``eval`` (one partial sum with branch dispatch), ``classify``
(branch diagnosis only), ``landau`` (the Landau constant routes), ``coeffs``
(coefficient tables), ``table1`` (the published error grid), and ``verify``
(the property suite).  JSON is the default output; ``--csv`` switches to CSV.
Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

import mpmath as mp

from . import coeffs, engine, landau, oracle, verification
from .engine import Tolerance
from .errors import HypersumError, VerificationFailure
from .params import ParamSet, classify

_FORM_MAP = {"psi": "psi_series", "alt": "alternative"}


def _complex_arg(text: str) -> complex:
    """Parse ``re[+im i]`` (also plain reals); 'i' marks the imaginary unit."""
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid complex value: {text!r}")


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}")
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _fmt(x: float) -> str:
    return "%.17g" % x


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(u) for u in v) + "]"
    if isinstance(v, dict):
        return ("{" + ", ".join(f"{json.dumps(k)}: {_json_value(u)}"
                                for k, u in v.items()) + "}")
    raise TypeError(f"unserializable value {v!r}")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return _fmt(v)
    if isinstance(v, (list, tuple)):
        return "|".join(_cell(u) for u in v)
    return str(v)


def _emit(records, args, out) -> None:
    """One dict -> JSON object / CSV row; a list -> JSON array / CSV rows."""
    if getattr(args, "csv", False):
        rows = records if isinstance(records, list) else [records]
        fields = []
        for row in rows:
            for key in row:
                if key not in fields:
                    fields.append(key)
        writer = csv.DictWriter(out, fieldnames=fields, restval="",
                                lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
    else:
        out.write(_json_value(records) + "\n")


def _complex_str(z: complex) -> str:
    if z.imag == 0.0:
        return _fmt(z.real)
    return f"{_fmt(z.real)}{'+' if z.imag >= 0 else '-'}{_fmt(abs(z.imag))}i"


def _report_record(rep: engine.EvalReport) -> dict:
    return {
        "value_re": rep.value.real,
        "value_im": rep.value.imag,
        "branch": rep.branch.kind,
        "terms_used": rep.terms_used,
        "est_error": rep.est_error,
        "warnings": list(rep.warnings),
    }


def _cmd_eval(args, out) -> int:
    pset = ParamSet(args.a, args.b, args.c)
    tol = Tolerance(rel_tol=args.tol) if args.tol is not None else Tolerance()
    cls = classify(args.a, args.b, args.c)
    if args.form is not None and cls.kind == "logarithmic":
        rep = engine.eval_log(pset, args.n, tol, form=_FORM_MAP[args.form])
    else:
        rep = engine.eval_auto(pset, args.n, tol)
    _emit(_report_record(rep), args, out)
    return 0


def _cmd_classify(args, out) -> int:
    cls = classify(args.a, args.b, args.c)
    _emit({"kind": cls.kind, "m": cls.m, "p": cls.p, "which": cls.which,
           "warnings": list(cls.warnings)}, args, out)
    return 0


def _landau_one(method: str, n: int, terms: int | None, h: float) -> dict:
    """One route at Landau index n (the estimate-producing routes are indexed
    one step higher internally, so they are called at n + 1)."""
    record = {"method": method, "index": n}
    if method == "direct":
        value = landau.landau_direct(n)
    elif method == "watson":
        value = landau.landau_watson(n)
    elif method == "ck":
        value = landau.landau_ck(n)
    elif method == "thm3":
        value, bound = landau.landau_theorem3(n + 1, 10 if terms is None else terms)
        record["bound"] = bound
    elif method == "asym":
        value = landau.landau_asymptotic(n + 1, 6 if terms is None else terms)
    elif method == "nemes":
        value = landau.landau_nemes(n, h, 3 if terms is None else terms)
    else:
        raise HypersumError(f"unknown method {method!r}")
    record["value_re"] = float(value)
    record["value_im"] = 0.0
    return record


def _cmd_landau(args, out) -> int:
    if args.method != "all":
        _emit(_landau_one(args.method, args.n, args.terms, args.h), args, out)
        return 0
    records = []
    failures = 0
    for method in ("direct", "watson", "ck", "thm3", "asym", "nemes"):
        try:
            records.append(_landau_one(method, args.n, args.terms, args.h))
        except HypersumError as exc:
            records.append({"method": method, "index": args.n,
                            "error": str(exc)})
            failures += 1
    _emit(records, args, out)
    return 1 if failures == len(records) else 0


def _exact_str(x) -> str:
    return str(x)


def _cmd_coeffs(args, out) -> int:
    fam = args.family
    if fam in ("sigma", "A", "lambda") and (args.a is None or args.b is None):
        raise HypersumError(f"family {fam!r} needs -a and -b")
    records = []
    if fam == "sigma":
        k = 6 if args.k is None else args.k
        table = coeffs.sigma_coeffs(args.a, args.b, k)
        for i, v in enumerate(table.values, start=1):
            z = complex(v)
            records.append({"k": i, "value_re": z.real, "value_im": z.imag})
    elif fam == "A":
        k = 3 if args.k is None else args.k
        if not 1 <= k <= 3:
            raise HypersumError(f"family A has depth 3, got --k {k}")
        table = coeffs.a_coeffs(args.a, args.b)
        for i, v in enumerate(table.values[:k], start=1):
            z = complex(v)
            records.append({"k": i, "value_re": z.real, "value_im": z.imag})
    elif fam == "C":
        k = 6 if args.k is None else args.k
        if not 1 <= k <= 6:
            raise HypersumError(f"family C has depth 6, got --k {k}")
        for i, v in enumerate(coeffs.c_coeffs().values[:k], start=1):
            records.append({"k": i, "value_re": float(v), "value_im": 0.0,
                            "exact": _exact_str(v)})
    elif fam == "g":
        k = 3 if args.k is None else args.k
        if not 1 <= k <= 3:
            raise HypersumError(f"family g has depth 3, got --k {k}")
        # ascending-power coefficients of the shift polynomials
        polys = (
            (Fraction(-3, 4), Fraction(1)),
            (Fraction(43, 192), Fraction(-3, 4), Fraction(1, 2)),
            (Fraction(-7, 128), Fraction(43, 96), Fraction(-3, 4),
             Fraction(1, 3)),
        )
        for i in range(1, k + 1):
            records.append({"k": i,
                            "coeffs": [_exact_str(c) for c in polys[i - 1]]})
    elif fam == "lambda":
        deep = 5 if (args.a == 0.5 and args.b == 0.5) else 2
        k = deep if args.k is None else args.k
        # the depth-k term at index 1 is the coefficient itself
        for i in range(1, k + 1):
            e = (coeffs.lambda_series(args.a, args.b, 1, i)
                 - coeffs.lambda_series(args.a, args.b, 1, i - 1))
            records.append({"k": i, "value_re": e.real, "value_im": e.imag})
    else:
        raise HypersumError(f"unknown family {fam!r}")
    _emit(records, args, out)
    return 0


def _cmd_table1(args, out) -> int:
    digits = oracle.default_digits() if args.digits is None else args.digits
    if not 30 <= digits <= 100_000:
        raise HypersumError(f"digits must lie in [30, 100000], got {digits}")
    records = []
    fine = True
    with mp.workdps(digits):
        for (pa, pb), n, printed in verification.LOG_ROWS:
            a, b = verification.as_mp(pa), verification.as_mp(pb)
            ref = verification._psum_mp(a, b, a + b, n)
            errs = [float(abs(verification._asym_log_mp(a, b, n, K) - ref))
                    for K in (1, 2, 3)]
            devs = [abs(e - p) / p for e, p in zip(errs, printed)]
            fine = fine and max(devs) < 0.01
            records.append({
                "case": "logarithmic",
                "a": _complex_str(verification.as_complex(pa)),
                "b": _complex_str(verification.as_complex(pb)),
                "c": _complex_str(verification.as_complex(pa)
                                  + verification.as_complex(pb)),
                "n": n, "errors": errs, "printed": list(printed),
            })
        for (pa, pb, pc), n, printed in verification.NEG_ROWS:
            a, b, c = (verification.as_mp(pa), verification.as_mp(pb),
                       verification.as_mp(pc))
            ref = verification._psum_mp(a, b, c, n)
            errs = [float(abs(verification._asym_neg_mp(a, b, c, n, K) - ref))
                    for K in (1, 2, 3)]
            devs = [abs(e - p) / p for e, p in zip(errs, printed)]
            fine = fine and max(devs) < 0.01
            records.append({
                "case": "negative-integer",
                "a": _complex_str(verification.as_complex(pa)),
                "b": _complex_str(verification.as_complex(pb)),
                "c": _complex_str(verification.as_complex(pc)),
                "n": n, "errors": errs, "printed": list(printed),
            })
    _emit(records, args, out)
    return 0 if fine else 3


def _cmd_verify(args, out) -> int:
    results = verification.run_all(seed=args.seed, cases=args.cases)
    _emit([{"name": r.name, "ok": r.ok, "detail": r.detail,
            "seconds": round(r.seconds, 3)} for r in results], args, out)
    return 0 if all(r.ok for r in results) else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersum",
        description="Partial sums of the Gauss series at unit argument, "
                    "Landau constants, and coefficient tables.",
        epilog="Complex values use re[+im i] syntax, e.g. -a 0.5+1i; values "
               "starting with a minus sign need the = form, e.g. -c=-2+2i.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true",
                       help="JSON output (the default)")
    group.add_argument("--csv", action="store_true", help="CSV output")

    p = sub.add_parser("eval", parents=[fmt],
                       help="evaluate one partial sum with branch dispatch")
    p.add_argument("-a", type=_complex_arg, required=True)
    p.add_argument("-b", type=_complex_arg, required=True)
    p.add_argument("-c", type=_complex_arg, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--tol", type=_positive_float,
                   help="relative series tolerance (default 1e-15)")
    p.add_argument("--form", choices=("psi", "alt"),
                   help="logarithmic-branch form (ignored on other branches)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("classify", parents=[fmt],
                       help="diagnose the excess branch without evaluating")
    p.add_argument("-a", type=_complex_arg, required=True)
    p.add_argument("-b", type=_complex_arg, required=True)
    p.add_argument("-c", type=_complex_arg, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("landau", parents=[fmt],
                       help="Landau constant G_n by the chosen route")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", default="direct",
                   choices=("direct", "watson", "ck", "thm3", "asym",
                            "nemes", "all"))
    p.add_argument("--h", type=float, default=1.0,
                   help="shift for the nemes route, in (0, 3/2)")
    p.add_argument("--terms", type=int,
                   help="depth: M for thm3 (default 10), K for asym "
                        "(default 6) and nemes (default 3)")
    p.set_defaults(func=_cmd_landau)

    p = sub.add_parser("coeffs", parents=[fmt],
                       help="emit one coefficient family")
    p.add_argument("--family", required=True,
                   choices=("sigma", "A", "C", "g", "lambda"))
    p.add_argument("-a", type=_complex_arg)
    p.add_argument("-b", type=_complex_arg)
    p.add_argument("--k", type=int, help="table depth (family default)")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("table1", parents=[fmt],
                       help="reproduce the published truncation-error grid")
    p.add_argument("--digits", type=int,
                   help="working precision (default: oracle digits)")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("verify", parents=[fmt],
                       help="run the property suite")
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=500,
                   help="random parameter sets for the oracle sweep")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except VerificationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except HypersumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
