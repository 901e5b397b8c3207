"""Label resolution across record directories, bundled records, the cache and the network.

Resolution order for ``RecordStore.get(label)``:
    1. explicit record directories (``--records DIR``), in the order given
    2. records bundled with the package (``h10_iwasawa/data/records``); an LMFDB label
       also matches a local record carrying it as ``lmfdb_label``
    3. the on-disk cache
    4. the remote transport (skipped offline)
"""

import logging
import threading
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Set, Union

from ..config import CliConfig
from ..constants import RECORD_SUFFIX
from ..curves import minimal_model, quadratic_twist
from ..exceptions import CurveError, RecordNotFoundError, RecordValidationError
from .cache import RecordCache
from .records import CurveRecord, is_lmfdb_label, load_record_file, normalize_label
from .remote import LmfdbTransport, RecordTransport, fetch_remote

logger = logging.getLogger(__name__)

__all__ = ["BUNDLED_RECORDS_DIR", "RecordStore", "load_record"]

BUNDLED_RECORDS_DIR = Path(__file__).parent.parent / "data" / "records"


class RecordStore:
    """Resolves curve labels to validated records.

    Examples:
        >>> store = RecordStore(offline=True)
        >>> store.get("58.a1").conductor
        58
        >>> store.find_twist(store.get("58a1"), -1).label
        '464f1'
    """

    def __init__(
        self,
        record_dirs: Sequence[Path] = (),
        cache: Optional[RecordCache] = None,
        transport: Optional[RecordTransport] = None,
        offline: bool = False,
        include_bundled: bool = True,
    ):
        self.record_dirs: List[Path] = [Path(p) for p in record_dirs]
        if include_bundled:
            self.record_dirs.append(BUNDLED_RECORDS_DIR)
        self.cache = cache if cache is not None else RecordCache()
        self.transport = transport
        self.offline = offline
        self._local: Optional[List[CurveRecord]] = None
        self._index_lock = threading.Lock()

    @classmethod
    def from_config(
        cls, config: CliConfig, transport: Optional[RecordTransport] = None
    ) -> "RecordStore":
        """Store wired to the config's directories, cache and (unless offline) LMFDB."""
        if transport is None and not config.offline:
            transport = LmfdbTransport(base_url=config.base_url)
        return cls(
            record_dirs=config.record_dirs,
            cache=RecordCache(config.cache_dir),
            transport=transport,
            offline=config.offline,
        )

    def _local_path(self, label: str) -> Optional[Path]:
        name = f"{normalize_label(label)}{RECORD_SUFFIX}"
        for directory in self.record_dirs:
            path = directory / name
            if path.is_file():
                return path
        return None

    def get(self, label: str) -> CurveRecord:
        """
        Validated record for ``label``.

        Raises:
            RecordNotFoundError: If no source knows the label
            OfflineError: If only the network could provide it and offline mode is on
            RecordValidationError: If the record found fails validation
        """
        path = self._local_path(label)
        if path is not None:
            logger.debug(f"{label} resolved from {path}")
            return load_record_file(path)

        if is_lmfdb_label(label):
            key = normalize_label(label)
            for record in self.local_records():
                if key in record.keys:
                    logger.debug(f"{label} resolved by LMFDB label: {record.label}")
                    return record

        cached = self.cache.get(label)
        if cached is not None:
            return cached

        if self.transport is None and not self.offline:
            raise RecordNotFoundError(
                f"No record for {label}",
                details={"label": label, "searched": [str(d) for d in self.record_dirs]},
            )
        return fetch_remote(
            label,
            self.transport,  # type: ignore[arg-type]
            self.cache,
            offline=self.offline or self.transport is None,
        )

    def find(self, label: str) -> Optional[CurveRecord]:
        """Like ``get`` but returns None when the label is unknown."""
        try:
            return self.get(label)
        except RecordNotFoundError:
            return None

    def local_records(self) -> List[CurveRecord]:
        """Every record in the record directories and the cache (loaded once)."""
        with self._index_lock:
            if self._local is None:
                self._local = list(self._scan_local())
            return list(self._local)

    def _scan_local(self) -> Iterator[CurveRecord]:
        seen: Set[str] = set()
        directories = [*self.record_dirs, self.cache.directory]
        for directory in directories:
            if not directory.is_dir():
                continue
            for path in sorted(directory.glob(f"*{RECORD_SUFFIX}")):
                if path.stem in seen:
                    continue
                try:
                    record = load_record_file(path)
                except RecordValidationError as e:
                    logger.warning(f"Skipping invalid record {path}: {e.message}")
                    continue
                if record.keys & seen:
                    continue
                seen.update(record.keys | {path.stem})
                yield record

    def find_twist(self, base: CurveRecord, d: int) -> Optional[CurveRecord]:
        """
        Record of the quadratic twist E^(d) of ``base``, if one is available locally.

        A record whose ``twist_of`` names (base, d) wins; otherwise any record whose
        minimal model equals the minimal model of E^(d).
        """
        records = self.local_records()
        keys = base.keys
        for record in records:
            link = record.twist_of
            if link is not None and normalize_label(link.label) in keys and link.d == d:
                logger.debug(f"twist {base.label}^({d}) found by link: {record.label}")
                return record

        try:
            target = minimal_model(quadratic_twist(base.curve, d))
        except CurveError:
            return None
        for record in records:
            if not record.keys & keys and minimal_model(record.curve) == target:
                logger.debug(f"twist {base.label}^({d}) found by model: {record.label}")
                return record
        return None


def load_record(
    source: Union[str, Path], store: Optional[RecordStore] = None
) -> CurveRecord:
    """
    Load a record from a file path, or resolve a label through ``store``.

    Without a store, labels resolve through ``RecordStore.from_config(CliConfig.from_env())``.

    Raises:
        RecordNotFoundError: If the path or label cannot be found
        RecordValidationError: If parsing or a cross-check fails
    """
    path = Path(source)
    if path.suffix == RECORD_SUFFIX or path.is_file():
        return load_record_file(path)
    if store is None:
        store = RecordStore.from_config(CliConfig.from_env())
    return store.get(str(source))
