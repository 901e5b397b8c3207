"""Centralized constants for h10-iwasawa.

Re-exports all constants from domain modules for convenient access.

Domain Modules:
    - arithmetic: precision, caps, search bounds, Kodaira symbols, Kriz-Li catalogue
    - network: timeouts, HTTP status codes, retry settings
    - ingest: record schema version, cache layout, environment variables
    - cli: exit codes and output formats

Usage:
    from h10_iwasawa.constants import DEFAULT_PRECISION, EXIT_NOT_ESTABLISHED
"""

from .arithmetic import (
    DEFAULT_CAP,
    DEFAULT_PRECISION,
    GAUSSIAN_DISCRIMINANT,
    KODAIRA_GOOD,
    KODAIRA_I0_STAR,
    KODAIRA_II,
    KODAIRA_II_STAR,
    KODAIRA_III,
    KODAIRA_III_STAR,
    KODAIRA_IV,
    KODAIRA_IV_STAR,
    KRIZ_LI_TABLE,
    POINT_COUNT_BOUND,
    TORSION_SEARCH_BOUND,
)
from .cli import (
    DEFAULT_SERIES_PRIME,
    EXIT_ERROR,
    EXIT_NOT_ESTABLISHED,
    EXIT_SATISFIED,
    FORMAT_JSON,
    FORMAT_TABLE,
    VALID_FORMATS,
)
from .ingest import (
    DEFAULT_CACHE_DIR,
    ENV_BASE_URL,
    ENV_CACHE_DIR,
    ENV_CAP,
    ENV_JOBS,
    ENV_OFFLINE,
    ENV_PRECISION,
    MOD2_IMAGES,
    RECORD_SUFFIX,
    SCHEMA_VERSION,
    TRUTHY_VALUES,
)
from .network import (
    HTTP_NOT_FOUND,
    HTTP_OK,
    HTTP_RATE_LIMITED,
    HTTP_RETRYABLE_CODES,
    HTTP_SERVICE_UNAVAILABLE,
    LMFDB_API_BASE,
    RETRY_MAX_ATTEMPTS,
    RETRY_WAIT_INCREMENT,
    RETRY_WAIT_MAX,
    RETRY_WAIT_START,
    TIMEOUT_API,
)

__all__ = [
    # Arithmetic
    "DEFAULT_CAP",
    "DEFAULT_PRECISION",
    "GAUSSIAN_DISCRIMINANT",
    "KODAIRA_GOOD",
    "KODAIRA_I0_STAR",
    "KODAIRA_II",
    "KODAIRA_II_STAR",
    "KODAIRA_III",
    "KODAIRA_III_STAR",
    "KODAIRA_IV",
    "KODAIRA_IV_STAR",
    "KRIZ_LI_TABLE",
    "POINT_COUNT_BOUND",
    "TORSION_SEARCH_BOUND",
    # CLI
    "DEFAULT_SERIES_PRIME",
    "EXIT_ERROR",
    "EXIT_NOT_ESTABLISHED",
    "EXIT_SATISFIED",
    "FORMAT_JSON",
    "FORMAT_TABLE",
    "VALID_FORMATS",
    # Ingest
    "DEFAULT_CACHE_DIR",
    "ENV_BASE_URL",
    "ENV_CACHE_DIR",
    "ENV_CAP",
    "ENV_JOBS",
    "ENV_OFFLINE",
    "ENV_PRECISION",
    "MOD2_IMAGES",
    "RECORD_SUFFIX",
    "SCHEMA_VERSION",
    "TRUTHY_VALUES",
    # Network
    "HTTP_NOT_FOUND",
    "HTTP_OK",
    "HTTP_RATE_LIMITED",
    "HTTP_RETRYABLE_CODES",
    "HTTP_SERVICE_UNAVAILABLE",
    "LMFDB_API_BASE",
    "RETRY_MAX_ATTEMPTS",
    "RETRY_WAIT_INCREMENT",
    "RETRY_WAIT_MAX",
    "RETRY_WAIT_START",
    "TIMEOUT_API",
]
