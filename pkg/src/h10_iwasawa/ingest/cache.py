"""On-disk cache of attested curve records.

Layout:
    $H10_CACHE_DIR/v{schema}/{label}.json    (one file per label; a curve known by a Cremona
                                              and an LMFDB label is written under both)

A schema bump moves to a fresh ``v{n}`` directory, so stale records are never read.
Reads are lock-free; writes for one label are serialized and land atomically
(temporary file + ``os.replace``), last writer wins. A cached file that no longer
parses or validates is deleted and reported as ``CacheCorruptionError``.
"""

import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Dict, Iterable, Optional

from ..constants import DEFAULT_CACHE_DIR, RECORD_SUFFIX, SCHEMA_VERSION
from ..exceptions import CacheCorruptionError, RecordValidationError
from .records import CurveRecord, dump_record, normalize_label, parse_record, validate_record

logger = logging.getLogger(__name__)

__all__ = ["RecordCache"]


class RecordCache:
    """Label-addressed record cache.

    Examples:
        >>> cache = RecordCache(Path("/tmp/h10"))
        >>> cache.put(record)
        >>> cache.get("58.a1").conductor
        58
    """

    def __init__(self, cache_dir: Optional[Path] = None, schema: int = SCHEMA_VERSION):
        """
        Args:
            cache_dir: Root directory (default: ~/.cache/h10-iwasawa)
            schema: Record schema version selecting the ``v{schema}`` subdirectory
        """
        self.cache_dir = Path(cache_dir) if cache_dir is not None else DEFAULT_CACHE_DIR
        self.schema = schema
        self._locks: Dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    @property
    def directory(self) -> Path:
        return self.cache_dir / f"v{self.schema}"

    def path_for(self, label: str) -> Path:
        return self.directory / f"{normalize_label(label)}{RECORD_SUFFIX}"

    def _lock(self, key: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(key, threading.Lock())

    def get(self, label: str) -> Optional[CurveRecord]:
        """
        Cached record for ``label`` or None on a miss.

        Hits are re-validated, so a hand-edited entry cannot skip the conductor and
        Tamagawa cross-checks.

        Raises:
            CacheCorruptionError: If the cached file is unreadable or fails validation
                (it is deleted)
        """
        path = self.path_for(label)
        if not path.is_file():
            logger.debug(f"Cache miss for {label}")
            return None
        try:
            record = validate_record(
                parse_record(path.read_text(encoding="utf-8"), source=str(path))
            )
        except RecordValidationError as e:
            logger.error(f"Corrupted cached record, deleting: {path}")
            path.unlink(missing_ok=True)
            raise CacheCorruptionError(
                f"Cached record for {label} was corrupted and has been deleted",
                details={"label": label, "path": str(path), **e.details},
            ) from e
        logger.debug(f"Cache hit for {label}")
        return record

    def put(self, record: CurveRecord, aliases: Iterable[str] = ()) -> Path:
        """
        Store a record under each of its labels and any ``aliases``.

        Returns the path under the record's own label.

        Raises:
            OSError: If the cache directory or file cannot be written (propagated)
        """
        text = dump_record(record)
        keys = sorted(record.keys | {normalize_label(a) for a in aliases})
        self.directory.mkdir(parents=True, exist_ok=True)
        for key in keys:
            self._write(key, text)
        logger.debug(f"Cached record {record.label} under {', '.join(keys)}")
        return self.path_for(record.key)

    def _write(self, key: str, text: str) -> None:
        path = self.path_for(key)
        with self._lock(key):
            fd, tmp_name = tempfile.mkstemp(dir=self.directory, prefix=f".{key}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                    handle.write(text)
                os.replace(tmp_name, path)
            except BaseException:
                Path(tmp_name).unlink(missing_ok=True)
                raise

    def invalidate(self, label: str) -> None:
        path = self.path_for(label)
        if path.exists():
            path.unlink()
            logger.warning(f"Invalidated cached record for {label}")

    def clear(self) -> None:
        """Remove every record of this schema version."""
        if not self.directory.exists():
            return
        for path in self.directory.glob(f"*{RECORD_SUFFIX}"):
            path.unlink()
        logger.info(f"Cleared record cache {self.directory}")

    def __contains__(self, label: object) -> bool:
        return isinstance(label, str) and self.path_for(label).is_file()

    def get_cache_stats(self) -> Dict[str, int]:
        """Entry count and total size in bytes of the current schema directory."""
        if not self.directory.exists():
            return {"total_entries": 0, "total_cached_size": 0}
        files = list(self.directory.glob(f"*{RECORD_SUFFIX}"))
        return {
            "total_entries": len(files),
            "total_cached_size": sum(f.stat().st_size for f in files),
        }
