"""Capped-precision p-adic arithmetic, F_p, P^1(F_p) and quadratic symbols."""

from .numbers import (
    AtLeast,
    FpElement,
    PadicNumber,
    ProjectiveLineFp,
    Scalar,
    Valuation,
    padic_arith,
    padic_invert,
    require_odd_prime,
    to_padic,
    valuation,
)
from .symbols import is_square_mod, kronecker_symbol, splits_in

__all__ = [
    "AtLeast",
    "FpElement",
    "PadicNumber",
    "ProjectiveLineFp",
    "Scalar",
    "Valuation",
    "padic_arith",
    "padic_invert",
    "require_odd_prime",
    "to_padic",
    "valuation",
    "is_square_mod",
    "kronecker_symbol",
    "splits_in",
]
