"""Partial sums of the Gauss hypergeometric series at unit argument.

The evaluators dispatch on the parametric excess s = c - a - b: a convergent
inverse-factorial tail for non-integer excess, psi-series forms on the
logarithmic line s = 0, finite closed forms at integer excess, and a
conjectured short form on the degenerate line.  The same machinery specializes
to the Landau constants, which get five independent routes, a truncation
bound, and the published coefficient families.  An extended-precision oracle
backs every claim; ``verification.run_all`` (or ``hypersum verify``) re-runs
the whole battery.
"""

from .coeffs import (
    CoefficientTable,
    a_coeffs,
    asym_log,
    asym_neg_int,
    c0,
    c_coeffs,
    g_poly,
    lambda_series,
    rearranged_tail,
    remainder_bound,
    sigma_coeffs,
)
from .complexfn import (
    POLE_TOL,
    bernoulli_numbers,
    digamma,
    gamma,
    gamma_ratio,
    is_near_pole,
    log_gamma,
    pochhammer,
)
from .engine import (
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
from .errors import (
    DivergentSeriesError,
    DomainError,
    HypersumError,
    InvalidParameterError,
    PoleError,
    PrecisionUnavailableError,
    VerificationFailure,
    WrongBranchError,
)
from .landau import (
    landau_asymptotic,
    landau_ck,
    landau_direct,
    landau_nemes,
    landau_theorem3,
    landau_watson,
    landau_watson_asymptotic,
)
from .oracle import (
    DEFAULT_DIGITS,
    ErrorReport,
    OracleValue,
    compare,
    digamma_ref,
    gamma_ref,
    landau_ref,
    oracle_eval,
    partial_sum_ref,
)
from .params import (
    INTEGER_TOL,
    NEAR_INTEGER_WARN,
    ExcessClass,
    ParamSet,
    SeqFactors,
    classify,
    seq_factors,
)
from .verification import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "CoefficientTable", "a_coeffs", "asym_log", "asym_neg_int", "c0",
    "c_coeffs", "g_poly", "lambda_series", "rearranged_tail",
    "remainder_bound", "sigma_coeffs",
    "POLE_TOL", "bernoulli_numbers", "digamma", "gamma", "gamma_ratio",
    "is_near_pole", "log_gamma", "pochhammer",
    "EvalReport", "Tolerance", "eval_auto", "eval_conjectured",
    "eval_generic", "eval_log", "eval_neg_int", "eval_pos_int", "f32_unit",
    "leading_term",
    "DivergentSeriesError", "DomainError", "HypersumError",
    "InvalidParameterError", "PoleError", "PrecisionUnavailableError",
    "VerificationFailure", "WrongBranchError",
    "landau_asymptotic", "landau_ck", "landau_direct", "landau_nemes",
    "landau_theorem3", "landau_watson", "landau_watson_asymptotic",
    "DEFAULT_DIGITS", "ErrorReport", "OracleValue", "compare", "digamma_ref",
    "gamma_ref", "landau_ref", "oracle_eval", "partial_sum_ref",
    "INTEGER_TOL", "NEAR_INTEGER_WARN", "ExcessClass", "ParamSet",
    "SeqFactors", "classify", "seq_factors",
    "CheckResult", "run_all",
    "__version__",
]
