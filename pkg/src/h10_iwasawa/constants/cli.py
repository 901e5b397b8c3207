"""Command-line contract: exit codes and output formats."""

from typing import Final, Tuple

EXIT_SATISFIED: Final[int] = 0
"""Every hypothesis passed (or the command completed normally)."""

EXIT_ERROR: Final[int] = 1
"""Load, validation, network or input error."""

EXIT_NOT_ESTABLISHED: Final[int] = 2
"""Completed, but some hypothesis failed or could not be established."""

FORMAT_TABLE: Final[str] = "table"
FORMAT_JSON: Final[str] = "json"
VALID_FORMATS: Final[Tuple[str, ...]] = (FORMAT_TABLE, FORMAT_JSON)

DEFAULT_SERIES_PRIME: Final[int] = 3
"""Prime used by ``series line`` and ``series solve`` when --p is omitted."""

assert len({EXIT_SATISFIED, EXIT_ERROR, EXIT_NOT_ESTABLISHED}) == 3, "Exit codes must differ"

__all__ = [
    "EXIT_SATISFIED",
    "EXIT_ERROR",
    "EXIT_NOT_ESTABLISHED",
    "FORMAT_TABLE",
    "FORMAT_JSON",
    "VALID_FORMATS",
    "DEFAULT_SERIES_PRIME",
]
