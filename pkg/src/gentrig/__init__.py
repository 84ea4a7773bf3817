"""Generalized p-trigonometric functions and power-mean convexity checks."""

from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    GentrigError,
    ParameterError,
    RangeError,
)
from .hypergeom import Evaluation, Method, digamma, gamma, gauss_2f1, pochhammer
from .means import power_mean
from .ptrig import (
    EigenPair,
    FnKind,
    arc_fn,
    arc_fn_deriv,
    arc_fn_pq,
    constant,
    eigenpair,
    fwd_fn,
    fwd_fn_deriv,
    lemma_fn,
    n_pq,
    pi_p,
    pi_pq,
)
from .quad_oracle import IntegralSpec, arc_integral, integrate
from .verify import CheckRecord, GridSpec, Report, run_suite

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "GentrigError",
    "ParameterError",
    "RangeError",
    "Evaluation",
    "Method",
    "digamma",
    "gamma",
    "gauss_2f1",
    "pochhammer",
    "power_mean",
    "EigenPair",
    "FnKind",
    "arc_fn",
    "arc_fn_deriv",
    "arc_fn_pq",
    "constant",
    "eigenpair",
    "fwd_fn",
    "fwd_fn_deriv",
    "lemma_fn",
    "n_pq",
    "pi_p",
    "pi_pq",
    "IntegralSpec",
    "arc_integral",
    "integrate",
    "CheckRecord",
    "GridSpec",
    "Report",
    "run_suite",
]
