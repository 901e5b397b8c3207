"""Attested-record constants: schema version, cache layout, environment variables.

Environment Variable Usage:
    H10_CACHE_DIR: Record cache directory (default: ~/.cache/h10-iwasawa)
    H10_BASE_URL: Remote record API base URL
    H10_OFFLINE: Disable the network ("true"/"1"/"yes")
    H10_PRECISION: Default p-adic precision N
    H10_CAP: Default series degree cap D
    H10_JOBS: Default scan worker count
"""

from pathlib import Path
from typing import Final, Tuple

# =============================================================================
# SCHEMA
# =============================================================================

SCHEMA_VERSION: Final[int] = 1
"""Integer version of the CurveRecord JSON schema. Bumps invalidate the cache."""

MOD2_IMAGES: Final[Tuple[str, ...]] = ("trivial", "Z/2", "Z/3", "S3")
"""Possible Galois groups of Q(E[2])/Q, as written in records and reports."""

# =============================================================================
# ENVIRONMENT VARIABLES
# =============================================================================

ENV_CACHE_DIR: Final[str] = "H10_CACHE_DIR"
ENV_BASE_URL: Final[str] = "H10_BASE_URL"
ENV_OFFLINE: Final[str] = "H10_OFFLINE"
ENV_PRECISION: Final[str] = "H10_PRECISION"
ENV_CAP: Final[str] = "H10_CAP"
ENV_JOBS: Final[str] = "H10_JOBS"

TRUTHY_VALUES: Final[Tuple[str, ...]] = ("true", "1", "yes")
"""Accepted spellings of a true boolean environment value."""

# =============================================================================
# CACHE LAYOUT
# =============================================================================

DEFAULT_CACHE_DIR: Final[Path] = Path.home() / ".cache" / "h10-iwasawa"
"""XDG-style default cache location."""

RECORD_SUFFIX: Final[str] = ".json"
"""File suffix of one cached record."""

# =============================================================================
# SELF-VALIDATING ASSERTIONS
# =============================================================================

assert SCHEMA_VERSION >= 1, f"SCHEMA_VERSION must be >= 1: {SCHEMA_VERSION}"
assert RECORD_SUFFIX.startswith("."), "RECORD_SUFFIX must be a file suffix"

# =============================================================================
# MODULE EXPORTS
# =============================================================================

__all__ = [
    "SCHEMA_VERSION",
    "MOD2_IMAGES",
    "ENV_CACHE_DIR",
    "ENV_BASE_URL",
    "ENV_OFFLINE",
    "ENV_PRECISION",
    "ENV_CAP",
    "ENV_JOBS",
    "TRUTHY_VALUES",
    "DEFAULT_CACHE_DIR",
    "RECORD_SUFFIX",
]
