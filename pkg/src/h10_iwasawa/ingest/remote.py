"""Remote record client for the LMFDB elliptic-curve API with retry logic.

The network sits behind ``RecordTransport``, a one-method interface (get a raw payload
by label), so tests substitute a canned transport. ``LmfdbTransport`` is the httpx
implementation; transient failures (timeouts, connection errors, 429/503) are retried
with an incrementing wait.

Attested Iwasawa data (Selmer coranks, regulator flags, Heegner flag) is not published
upstream and stays absent in normalized records.
"""

import logging
from typing import Any, Dict, Mapping, Optional, Protocol, runtime_checkable

import httpx
from tenacity import (
    retry,
    retry_if_exception_type,
    stop_after_attempt,
    wait_incrementing,
)

from ..constants import (
    HTTP_NOT_FOUND,
    HTTP_OK,
    HTTP_RETRYABLE_CODES,
    LMFDB_API_BASE,
    RETRY_MAX_ATTEMPTS,
    RETRY_WAIT_INCREMENT,
    RETRY_WAIT_MAX,
    RETRY_WAIT_START,
    SCHEMA_VERSION,
    TIMEOUT_API,
)
from ..exceptions import (
    NetworkError,
    OfflineError,
    RecordNotFoundError,
    RecordValidationError,
)
from .cache import RecordCache
from .records import CurveRecord, is_lmfdb_label, record_from_payload, validate_record

logger = logging.getLogger(__name__)

__all__ = [
    "RecordTransport",
    "LmfdbTransport",
    "RetryableStatusError",
    "fetch_json_with_retry",
    "normalize_payload",
    "fetch_remote",
]


@runtime_checkable
class RecordTransport(Protocol):
    """Anything that can return the raw upstream payload for a label."""

    def get(self, label: str) -> Mapping[str, Any]: ...


class RetryableStatusError(Exception):
    """Upstream answered with a status worth retrying (429, 503)."""

    def __init__(self, status_code: int):
        self.status_code = status_code
        super().__init__(f"HTTP {status_code}")


@retry(
    stop=stop_after_attempt(RETRY_MAX_ATTEMPTS),
    wait=wait_incrementing(
        start=RETRY_WAIT_START, increment=RETRY_WAIT_INCREMENT, max=RETRY_WAIT_MAX
    ),
    retry=retry_if_exception_type(
        (httpx.TimeoutException, httpx.NetworkError, RetryableStatusError)
    ),
    before_sleep=lambda retry_state: logger.warning(
        f"Retry attempt {retry_state.attempt_number}/{RETRY_MAX_ATTEMPTS} "
        f"after error: {retry_state.outcome.exception()}"  # type: ignore[union-attr]
    ),
    reraise=True,
)
def fetch_json_with_retry(
    url: str, params: Dict[str, Any], timeout: float = TIMEOUT_API
) -> Any:
    """
    GET ``url`` and decode JSON, retrying transient failures.

    Raises:
        RecordNotFoundError: On HTTP 404
        NetworkError: On any other non-200 status
        RetryableStatusError: On 429/503 after the last attempt
        httpx.TimeoutException / httpx.NetworkError: After the last attempt
    """
    response = httpx.get(url, params=params, timeout=timeout)

    if response.status_code in HTTP_RETRYABLE_CODES:
        raise RetryableStatusError(response.status_code)
    if response.status_code == HTTP_NOT_FOUND:
        raise RecordNotFoundError(
            f"Upstream has no record at {url}", details={"url": url, "params": params}
        )
    if response.status_code != HTTP_OK:
        raise NetworkError(
            f"HTTP {response.status_code} from {url}",
            details={"url": url, "status_code": response.status_code},
        )
    return response.json()


class LmfdbTransport:
    """httpx transport for ``/api/ec_curvedata/``.

    Examples:
        >>> transport = LmfdbTransport()
        >>> transport.get("58.a1")["conductor"]
        58
    """

    def __init__(self, base_url: str = LMFDB_API_BASE, timeout: float = TIMEOUT_API):
        self.base_url = base_url
        self.timeout = timeout

    @staticmethod
    def _query(label: str) -> Dict[str, Any]:
        field = "lmfdb_label" if is_lmfdb_label(label) else "Clabel"
        return {"_format": "json", field: label}

    def get(self, label: str) -> Mapping[str, Any]:
        """
        Raw ``ec_curvedata`` row for a label.

        Raises:
            RecordNotFoundError: If upstream has no such curve
            NetworkError: If the request fails after retries
        """
        params = self._query(label)
        logger.info(f"Fetching {label} from {self.base_url}")
        try:
            body = fetch_json_with_retry(self.base_url, params, timeout=self.timeout)
        except (httpx.HTTPError, RetryableStatusError) as e:
            raise NetworkError(
                f"Request for {label} failed: {e}",
                details={"label": label, "url": self.base_url},
            ) from e
        rows = body.get("data") if isinstance(body, Mapping) else None
        if not rows:
            raise RecordNotFoundError(
                f"Upstream returned no curve for {label}", details={"label": label}
            )
        return rows[0]


def normalize_payload(payload: Mapping[str, Any], label: Optional[str] = None) -> CurveRecord:
    """
    Map an ``ec_curvedata`` row onto a schema-1 ``CurveRecord``.

    Raises:
        RecordValidationError: If required upstream fields are missing or malformed
    """
    if not isinstance(payload, Mapping):
        raise RecordValidationError(
            "upstream payload is not an object", details={"label": label}
        )
    lmfdb_label = payload.get("lmfdb_label")
    if lmfdb_label is None and label is not None and is_lmfdb_label(label):
        lmfdb_label = label
    try:
        normalized: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "label": payload.get("Clabel") or lmfdb_label or label,
            "lmfdb_label": lmfdb_label,
            "ainvs": payload["ainvs"],
            "conductor": payload["conductor"],
            "rank": payload.get("rank"),
            "sha_order": payload.get("sha"),
            "torsion": payload.get("torsion_structure") or [],
        }
    except KeyError as e:
        raise RecordValidationError(
            f"upstream payload lacks field {e.args[0]!r}",
            details={"label": label, "field": e.args[0]},
        ) from e
    if normalized["label"] is None:
        raise RecordValidationError("upstream payload has no label", details={"label": label})
    return record_from_payload(normalized, source=f"remote:{label}")


def fetch_remote(
    label: str,
    transport: RecordTransport,
    cache: RecordCache,
    offline: bool = False,
) -> CurveRecord:
    """
    Record for ``label``: the cache first, then the transport; fetched records are cached.

    A cache hit performs no network call. A fetched record is cached under the requested
    label and under the Cremona and LMFDB labels of the payload, so a repeat request in
    any of those spellings is a hit. A malformed payload leaves the cache untouched.

    Raises:
        OfflineError: If offline with a cold cache, or the network failed
        RecordNotFoundError: If upstream has no such curve
        RecordValidationError: If the payload cannot be normalized or fails cross-checks
    """
    cached = cache.get(label)
    if cached is not None:
        return cached

    if offline:
        raise OfflineError(
            f"{label} is not cached and offline mode is on",
            details={"label": label, "cache_dir": str(cache.cache_dir)},
        )

    try:
        payload = transport.get(label)
    except NetworkError as e:
        raise OfflineError(
            f"{label} could not be fetched and is not cached: {e.message}",
            details={"label": label, **e.details},
        ) from e

    record = validate_record(normalize_payload(payload, label))
    cache.put(record, aliases=(label,))
    logger.info(f"Fetched and cached {record.label} (requested as {label})")
    return record
