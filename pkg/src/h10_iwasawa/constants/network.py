"""Network configuration constants for the remote record transport.

Single source of truth for timeouts, HTTP status codes and retry settings used by
the LMFDB client in ``ingest.remote``.

Usage:
    from h10_iwasawa.constants.network import (
        TIMEOUT_API,
        HTTP_OK,
        RETRY_MAX_ATTEMPTS,
    )
"""

from typing import Final, Tuple

# =============================================================================
# ENDPOINTS
# =============================================================================

LMFDB_API_BASE: Final[str] = "https://www.lmfdb.org/api/ec_curvedata/"
"""LMFDB elliptic-curve data API (JSON via ``_format=json``)."""

# =============================================================================
# TIMEOUTS (seconds)
# =============================================================================

TIMEOUT_API: Final[float] = 30.0
"""Default timeout for a single record request."""

# =============================================================================
# HTTP STATUS CODES
# =============================================================================

HTTP_OK: Final[int] = 200
"""Successful HTTP response."""

HTTP_NOT_FOUND: Final[int] = 404
"""Unknown label upstream."""

HTTP_RATE_LIMITED: Final[int] = 429
"""Too many requests - rate limited."""

HTTP_SERVICE_UNAVAILABLE: Final[int] = 503
"""Upstream temporarily unavailable."""

HTTP_RETRYABLE_CODES: Final[Tuple[int, ...]] = (HTTP_RATE_LIMITED, HTTP_SERVICE_UNAVAILABLE)
"""HTTP status codes worth retrying."""

# =============================================================================
# RETRY CONFIGURATION
# =============================================================================

RETRY_MAX_ATTEMPTS: Final[int] = 3
"""Maximum number of attempts for transient failures."""

RETRY_WAIT_START: Final[float] = 1.0
"""First wait between attempts in seconds."""

RETRY_WAIT_INCREMENT: Final[float] = 1.0
"""Added to the wait after each failed attempt."""

RETRY_WAIT_MAX: Final[float] = 3.0
"""Upper bound on the wait between attempts."""

# =============================================================================
# SELF-VALIDATING ASSERTIONS
# =============================================================================

assert TIMEOUT_API > 0, f"TIMEOUT_API must be positive: {TIMEOUT_API}"
assert 100 <= HTTP_OK <= 599, f"HTTP_OK must be valid status: {HTTP_OK}"
assert all(100 <= code <= 599 for code in HTTP_RETRYABLE_CODES), "Retry codes must be valid"
assert RETRY_MAX_ATTEMPTS >= 1, f"RETRY_MAX_ATTEMPTS must be >= 1: {RETRY_MAX_ATTEMPTS}"
assert RETRY_WAIT_START >= 0, f"RETRY_WAIT_START must be >= 0: {RETRY_WAIT_START}"

# =============================================================================
# MODULE EXPORTS
# =============================================================================

__all__ = [
    "LMFDB_API_BASE",
    "TIMEOUT_API",
    "HTTP_OK",
    "HTTP_NOT_FOUND",
    "HTTP_RATE_LIMITED",
    "HTTP_SERVICE_UNAVAILABLE",
    "HTTP_RETRYABLE_CODES",
    "RETRY_MAX_ATTEMPTS",
    "RETRY_WAIT_START",
    "RETRY_WAIT_INCREMENT",
    "RETRY_WAIT_MAX",
]
