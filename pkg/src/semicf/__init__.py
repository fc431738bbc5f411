"""Exact arithmetic for semi-regular continued fractions.

Convergents, tail values, and certified error bounds for continued
fractions with numerators in {-1, +1}, all computed over exact rationals.
"""

from .core import (
    B_TOO_SMALL,
    GAP_VIOLATION,
    ConvergentState,
    SemiRegularCF,
    Term,
    ValidationReport,
    Violation,
    convergent,
    determinant_check,
    gap,
    init_state,
    iter_states,
    rational,
    series_partial_sum,
    state_at,
    step,
    validate,
)
from .errors import (
    BudgetExhausted,
    CFError,
    DenominatorBelowOne,
    IdentityViolation,
    InsufficientTerms,
    ParseError,
    TietzeViolation,
    ZeroDenominator,
)
from .expand import (
    ExpansionAlgo,
    RandomSpec,
    expand,
    nearest_int_expand,
    negative_expand,
    random_tietze,
    regular_expand,
)
from .oracle import fold_eval
from .tails import (
    ALL_MINUS_TAIL,
    DEFAULT_MAX_STEPS,
    PLUS_ANCHOR,
    ErrorCertificate,
    EvalResult,
    TailValue,
    anchor_index,
    certify,
    error_bound,
    evaluate,
    shift_check,
    tail,
    uniform_step_bound,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_MINUS_TAIL",
    "B_TOO_SMALL",
    "BudgetExhausted",
    "CFError",
    "ConvergentState",
    "DEFAULT_MAX_STEPS",
    "DenominatorBelowOne",
    "ErrorCertificate",
    "EvalResult",
    "ExpansionAlgo",
    "GAP_VIOLATION",
    "IdentityViolation",
    "InsufficientTerms",
    "PLUS_ANCHOR",
    "ParseError",
    "RandomSpec",
    "SemiRegularCF",
    "TailValue",
    "Term",
    "TietzeViolation",
    "ValidationReport",
    "Violation",
    "ZeroDenominator",
    "anchor_index",
    "certify",
    "convergent",
    "determinant_check",
    "error_bound",
    "evaluate",
    "expand",
    "fold_eval",
    "gap",
    "init_state",
    "iter_states",
    "nearest_int_expand",
    "negative_expand",
    "random_tietze",
    "rational",
    "regular_expand",
    "series_partial_sum",
    "shift_check",
    "state_at",
    "step",
    "tail",
    "uniform_step_bound",
    "validate",
]
