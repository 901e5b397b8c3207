"""
Runtime configuration for the h10-iwasawa library and CLI.

Values come from (lowest to highest priority) the defaults in ``constants``, the
``H10_*`` environment variables, and explicit CLI flags.

Environment Variables:
    H10_CACHE_DIR: Record cache directory
    H10_BASE_URL: Remote record API base URL
    H10_OFFLINE: Disable the network ("true"/"1"/"yes")
    H10_PRECISION: p-adic precision N
    H10_CAP: Series degree cap D
    H10_JOBS: Scan worker count

Error Handling: malformed values raise ValueError naming the variable.
"""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Optional, Tuple

from .constants import (
    DEFAULT_CACHE_DIR,
    DEFAULT_CAP,
    DEFAULT_PRECISION,
    ENV_BASE_URL,
    ENV_CACHE_DIR,
    ENV_CAP,
    ENV_JOBS,
    ENV_OFFLINE,
    ENV_PRECISION,
    FORMAT_TABLE,
    LMFDB_API_BASE,
    TRUTHY_VALUES,
    VALID_FORMATS,
)

__all__ = ["CliConfig", "DEFAULT_JOBS"]

DEFAULT_JOBS = 4


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"Invalid {name} (must be integer): {raw!r}") from e


@dataclass(frozen=True)
class CliConfig:
    """
    Settings shared by every command.

    Attributes:
        precision: p-adic precision N (digits)
        cap: Series degree cap D
        cache_dir: Directory for cached attested records
        base_url: Remote record API base URL
        offline: Never touch the network when True
        output_format: "table" or "json"
        jobs: Worker threads for twist scans
        record_dirs: Extra directories searched for ``<label>.json`` records

    Example:
        config = CliConfig.from_env().with_overrides(precision=30, output_format="json")
        config.validate()
    """

    precision: int = DEFAULT_PRECISION
    cap: int = DEFAULT_CAP
    cache_dir: Path = DEFAULT_CACHE_DIR
    base_url: str = LMFDB_API_BASE
    offline: bool = False
    output_format: str = FORMAT_TABLE
    jobs: int = DEFAULT_JOBS
    record_dirs: Tuple[Path, ...] = field(default_factory=tuple)

    @classmethod
    def from_env(cls) -> "CliConfig":
        """
        Create configuration from ``H10_*`` environment variables.

        Raises:
            ValueError: If H10_PRECISION, H10_CAP or H10_JOBS is not an integer
        """
        cache_dir = os.getenv(ENV_CACHE_DIR)
        return cls(
            precision=_int_from_env(ENV_PRECISION, DEFAULT_PRECISION),
            cap=_int_from_env(ENV_CAP, DEFAULT_CAP),
            cache_dir=Path(cache_dir).expanduser() if cache_dir else DEFAULT_CACHE_DIR,
            base_url=os.getenv(ENV_BASE_URL) or LMFDB_API_BASE,
            offline=os.getenv(ENV_OFFLINE, "false").lower() in TRUTHY_VALUES,
            jobs=_int_from_env(ENV_JOBS, DEFAULT_JOBS),
        )

    def with_overrides(self, **overrides: Optional[Any]) -> "CliConfig":
        """Return a copy with every non-None override applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        if "cache_dir" in changes:
            changes["cache_dir"] = Path(changes["cache_dir"]).expanduser()
        if "record_dirs" in changes:
            changes["record_dirs"] = tuple(Path(p).expanduser() for p in changes["record_dirs"])
        return replace(self, **changes)

    def validate(self) -> None:
        """
        Validate configuration parameters.

        Raises:
            ValueError: If any parameter is out of range
        """
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")

        if self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")

        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")

        if self.output_format not in VALID_FORMATS:
            raise ValueError(
                f"output_format must be one of {', '.join(VALID_FORMATS)}, got {self.output_format!r}"
            )

        if not self.base_url:
            raise ValueError("base_url cannot be empty")
