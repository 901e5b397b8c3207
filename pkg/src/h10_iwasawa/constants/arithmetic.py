"""Arithmetic defaults: p-adic precision, series caps, search bounds.

Single source of truth for the numeric defaults used by the padic, series,
curves and criteria layers.

Design Principles:
    - Final[] annotations prevent accidental reassignment
    - Self-validating assertions catch misconfigurations at import time

Usage:
    from h10_iwasawa.constants.arithmetic import DEFAULT_PRECISION, DEFAULT_CAP
"""

from typing import Final, Tuple

# =============================================================================
# P-ADIC PRECISION AND SERIES CAPS
# =============================================================================

DEFAULT_PRECISION: Final[int] = 20
"""Default number of p-adic digits N (residues are kept mod p^N)."""

DEFAULT_CAP: Final[int] = 12
"""Default degree cap D for univariate series and total-degree cap for bivariate series."""

# =============================================================================
# SEARCH BOUNDS
# =============================================================================

POINT_COUNT_BOUND: Final[int] = 10**6
"""Largest prime for which naive point counting is attempted."""

TORSION_SEARCH_BOUND: Final[int] = 500
"""Auxiliary primes below this bound are tried when certifying E(Q)[p] = 0."""

# =============================================================================
# KODAIRA SYMBOLS
# =============================================================================

KODAIRA_GOOD: Final[str] = "I0"
KODAIRA_II: Final[str] = "II"
KODAIRA_III: Final[str] = "III"
KODAIRA_IV: Final[str] = "IV"
KODAIRA_I0_STAR: Final[str] = "I0*"
KODAIRA_IV_STAR: Final[str] = "IV*"
KODAIRA_III_STAR: Final[str] = "III*"
KODAIRA_II_STAR: Final[str] = "II*"

# =============================================================================
# KRIZ-LI CATALOGUE
# =============================================================================

KRIZ_LI_TABLE: Final[Tuple[Tuple[str, int, int], ...]] = (
    ("37a1", -7, 11),
    ("43a1", -7, 11),
    ("88a1", -7, 37),
    ("91a1", -55, 31),
    ("92b1", -7, 11),
    ("123a1", -23, 13),
    ("123b1", -23, 13),
    ("131a1", -23, 13),
    ("141a1", -23, 13),
    ("141d1", -23, 13),
    ("148a1", -7, 11),
)
"""Published (curve label, d_K0, p) triples for which the Kriz-Li set S applies."""

GAUSSIAN_DISCRIMINANT: Final[int] = -4
"""Fundamental discriminant of Q(i); selects the alternative Z/3 density."""

# =============================================================================
# SELF-VALIDATING ASSERTIONS
# =============================================================================

assert DEFAULT_PRECISION >= 1, f"DEFAULT_PRECISION must be >= 1: {DEFAULT_PRECISION}"
assert DEFAULT_CAP >= 1, f"DEFAULT_CAP must be >= 1: {DEFAULT_CAP}"
assert TORSION_SEARCH_BOUND > 5, f"TORSION_SEARCH_BOUND too small: {TORSION_SEARCH_BOUND}"
assert all(p % 2 == 1 for _, _, p in KRIZ_LI_TABLE), "Kriz-Li primes must be odd"

# =============================================================================
# MODULE EXPORTS
# =============================================================================

__all__ = [
    "DEFAULT_PRECISION",
    "DEFAULT_CAP",
    "POINT_COUNT_BOUND",
    "TORSION_SEARCH_BOUND",
    "KODAIRA_GOOD",
    "KODAIRA_II",
    "KODAIRA_III",
    "KODAIRA_IV",
    "KODAIRA_I0_STAR",
    "KODAIRA_IV_STAR",
    "KODAIRA_III_STAR",
    "KODAIRA_II_STAR",
    "KRIZ_LI_TABLE",
    "GAUSSIAN_DISCRIMINANT",
]
