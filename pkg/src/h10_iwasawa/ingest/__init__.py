"""Attested curve records: schema, validation, cache, remote client and label store."""

from .cache import RecordCache
from .records import (
    CurveRecord,
    IsogenyData,
    TwistOf,
    dump_record,
    is_lmfdb_label,
    load_record_file,
    normalize_label,
    parse_record,
    record_from_payload,
    validate_record,
)
from .remote import (
    LmfdbTransport,
    RecordTransport,
    fetch_json_with_retry,
    fetch_remote,
    normalize_payload,
)
from .store import BUNDLED_RECORDS_DIR, RecordStore, load_record

__all__ = [
    "CurveRecord",
    "IsogenyData",
    "TwistOf",
    "normalize_label",
    "is_lmfdb_label",
    "parse_record",
    "record_from_payload",
    "validate_record",
    "load_record",
    "load_record_file",
    "dump_record",
    "RecordCache",
    "RecordTransport",
    "LmfdbTransport",
    "fetch_json_with_retry",
    "fetch_remote",
    "normalize_payload",
    "RecordStore",
    "BUNDLED_RECORDS_DIR",
]
