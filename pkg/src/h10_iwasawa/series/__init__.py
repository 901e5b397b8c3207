"""Truncated power series, line specialization and Iwasawa invariants."""

from .invariants import (
    IwasawaInvariants,
    excluded_line,
    is_mu0_lambda1,
    line_invariants,
    mu_lambda,
)
from .lines import binomial_series, implicit_solve, is_unit_scalar, line_series, specialize_line
from .power_series import BivariateSeries, UnivariateSeries

__all__ = [
    "BivariateSeries",
    "UnivariateSeries",
    "IwasawaInvariants",
    "binomial_series",
    "line_series",
    "implicit_solve",
    "specialize_line",
    "is_unit_scalar",
    "mu_lambda",
    "excluded_line",
    "line_invariants",
    "is_mu0_lambda1",
]
