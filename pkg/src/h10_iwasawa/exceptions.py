"""Structured exception hierarchy for h10-iwasawa.

Provides machine-parseable error details via the .details dict attribute, so that
callers (and the CLI) can report which prime, label or field caused a failure.

Exception Hierarchy:
    H10IwasawaError (base)
    ├── PadicError - p-adic arithmetic failures
    │   ├── PrimeMismatchError
    │   ├── NotInvertibleError
    │   └── PrecisionLossError
    ├── SeriesError - power-series and line failures
    │   ├── InvalidLineError
    │   ├── NotCotorsionError
    │   └── CyclotomicHypothesisError
    ├── CurveError - elliptic-curve failures
    │   ├── SingularCurveError
    │   ├── BadReductionError
    │   ├── RamifiedPrimeError
    │   └── MissingIsogenyError
    ├── CriteriaError - criterion evaluation failures
    │   ├── HypothesisError
    │   ├── UnsupportedGaloisImageError
    │   ├── NonSemistableError
    │   └── UnresolvedSelmerRatioError
    ├── IngestError - attested-record failures
    │   ├── RecordValidationError
    │   ├── RecordNotFoundError
    │   ├── CacheCorruptionError
    │   └── NetworkError
    │       └── OfflineError
    └── InputValidationError - malformed user input (also a ValueError)
"""

from typing import Any


class H10IwasawaError(Exception):
    """Base exception for all h10-iwasawa errors.

    Attributes:
        message: Human-readable error message
        details: Machine-parseable error context (dict)

    Examples:
        >>> try:
        ...     raise BadReductionError(
        ...         "curve has bad reduction at p",
        ...         details={"p": 37, "conductor": 37}
        ...     )
        ... except H10IwasawaError as e:
        ...     print(e.details)
        {'p': 37, 'conductor': 37}
    """

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize exception with message and optional structured details.

        Args:
            message: Human-readable error description
            details: Machine-parseable context (prime, label, field, etc.)
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


# =============================================================================
# P-ADIC ARITHMETIC
# =============================================================================


class PadicError(H10IwasawaError):
    """Base for failures in p-adic and F_p arithmetic."""


class PrimeMismatchError(PadicError):
    """Raised when two operands live over different primes.

    Example:
        >>> raise PrimeMismatchError(
        ...     "cannot combine 3-adic and 5-adic numbers",
        ...     details={"left": 3, "right": 5}
        ... )
    """


class NotInvertibleError(PadicError):
    """Raised when inverting a non-unit (or zero in F_p)."""


class PrecisionLossError(PadicError):
    """Raised when an operation would leave fewer than one significant digit."""


# =============================================================================
# POWER SERIES
# =============================================================================


class SeriesError(H10IwasawaError):
    """Base for power-series failures."""


class InvalidLineError(SeriesError):
    """Raised when a coefficient pair (a, b) has both entries in pZ_p."""


class NotCotorsionError(SeriesError):
    """Raised when a specialized series is zero to the working precision.

    A zero characteristic series means the Selmer group is not cotorsion, so no
    (mu, lambda) pair exists.
    """


class CyclotomicHypothesisError(SeriesError):
    """Raised when F(0, Y) does not vanish to order exactly one at Y = 0."""


# =============================================================================
# ELLIPTIC CURVES
# =============================================================================


class CurveError(H10IwasawaError):
    """Base for elliptic-curve failures."""


class SingularCurveError(CurveError):
    """Raised when a Weierstrass model has zero discriminant.

    Example:
        >>> raise SingularCurveError(
        ...     "discriminant is zero",
        ...     details={"ainvs": [0, 0, 0, 0, 0]}
        ... )
    """


class BadReductionError(CurveError):
    """Raised when a good-reduction-only operation meets a prime of bad reduction."""


class RamifiedPrimeError(CurveError):
    """Raised when a Frobenius is requested at a prime ramified in Q(E[2])."""


class MissingIsogenyError(CurveError):
    """Raised when a 3-isogeny computation is requested for a record without one."""


# =============================================================================
# CRITERIA
# =============================================================================


class CriteriaError(H10IwasawaError):
    """Base for criterion evaluation failures."""


class HypothesisError(CriteriaError):
    """Raised when a precondition of a criterion is violated.

    Example:
        >>> raise HypothesisError(
        ...     "reduction at p is not good ordinary",
        ...     details={"label": "37a1", "p": 3}
        ... )
    """


class UnsupportedGaloisImageError(CriteriaError):
    """Raised when the density formula has no case for the mod-2 image."""


class NonSemistableError(CriteriaError):
    """Raised when the 3-isogeny density formula meets a non-squarefree conductor."""


class UnresolvedSelmerRatioError(CriteriaError):
    """Raised when a Selmer ratio is needed as a single value but is ambiguous."""


# =============================================================================
# ATTESTED RECORDS
# =============================================================================


class IngestError(H10IwasawaError):
    """Base for attested-record failures."""


class RecordValidationError(IngestError):
    """Raised when a record is malformed or internally inconsistent.

    Example:
        >>> raise RecordValidationError(
        ...     "conductor disagrees with Tate's algorithm",
        ...     details={"label": "37a1", "field": "conductor", "attested": 38, "computed": 37}
        ... )
    """


class RecordNotFoundError(IngestError):
    """Raised when no source can provide a record for a label."""


class CacheCorruptionError(IngestError):
    """Raised when a cached record file cannot be parsed. The file is removed."""


class NetworkError(IngestError):
    """Raised when the remote record transport fails.

    Common scenarios:
    - HTTP request timeouts
    - Connection failures
    - Rate limiting (429 status)
    - Server errors (5xx status)
    """


class OfflineError(NetworkError):
    """Raised when a record is needed from the network but offline mode is on."""


# =============================================================================
# USER INPUT
# =============================================================================


class InputValidationError(H10IwasawaError, ValueError):
    """Raised for malformed user input (non-prime p, zero d, bad JSON series, ...)."""


__all__ = [
    "H10IwasawaError",
    "PadicError",
    "PrimeMismatchError",
    "NotInvertibleError",
    "PrecisionLossError",
    "SeriesError",
    "InvalidLineError",
    "NotCotorsionError",
    "CyclotomicHypothesisError",
    "CurveError",
    "SingularCurveError",
    "BadReductionError",
    "RamifiedPrimeError",
    "MissingIsogenyError",
    "CriteriaError",
    "HypothesisError",
    "UnsupportedGaloisImageError",
    "NonSemistableError",
    "UnresolvedSelmerRatioError",
    "IngestError",
    "RecordValidationError",
    "RecordNotFoundError",
    "CacheCorruptionError",
    "NetworkError",
    "OfflineError",
    "InputValidationError",
]
