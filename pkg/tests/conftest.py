"""
Pytest configuration and shared fixtures for h10-iwasawa tests.

Records come from the bundled fixtures in ``h10_iwasawa/data/records``; every store
is offline and caches into a per-test temporary directory, so no test touches the
network or the user's cache.
"""

import random
from typing import Any, Dict, List, Mapping

import pytest

from h10_iwasawa.exceptions import NetworkError, RecordNotFoundError
from h10_iwasawa.ingest import CurveRecord, RecordCache, RecordStore

# =============================================================================
# RECORDS
# =============================================================================


@pytest.fixture
def cache(tmp_path) -> RecordCache:
    return RecordCache(tmp_path / "cache")


@pytest.fixture
def store(cache) -> RecordStore:
    """Offline store over the bundled records."""
    return RecordStore(cache=cache, offline=True)


@pytest.fixture
def e58(store) -> CurveRecord:
    """58a1, rank 1, the curve of the p = 17 example."""
    return store.get("58a1")


@pytest.fixture
def e61(store) -> CurveRecord:
    """61a1, rank 1, the curve of the p = 11 example."""
    return store.get("61a1")


@pytest.fixture
def e37(store) -> CurveRecord:
    """37a1, the Kriz-Li example curve."""
    return store.get("37a1")


@pytest.fixture
def e1216(store) -> CurveRecord:
    """1216o3: y^2 = x^3 + 216x - 54 with a rational 3-isogeny (kernel x = 6)."""
    return store.get("1216o3")


# =============================================================================
# REMOTE TRANSPORT
# =============================================================================

LMFDB_58A1: Dict[str, Any] = {
    "Clabel": "58a1",
    "lmfdb_label": "58.a1",
    "ainvs": [1, -1, 0, -1, 1],
    "conductor": 58,
    "rank": 1,
    "sha": 1,
    "torsion_structure": [],
}
"""An ``ec_curvedata`` row as LMFDB serves it (subset of fields)."""


class CannedTransport:
    """RecordTransport returning fixed payloads and counting calls."""

    def __init__(self, payloads: Mapping[str, Mapping[str, Any]], fail: bool = False):
        self.payloads = dict(payloads)
        self.fail = fail
        self.calls: List[str] = []

    def get(self, label: str) -> Mapping[str, Any]:
        self.calls.append(label)
        if self.fail:
            raise NetworkError("connection refused", details={"label": label})
        if label not in self.payloads:
            raise RecordNotFoundError(f"no curve {label}", details={"label": label})
        return self.payloads[label]


@pytest.fixture
def transport() -> CannedTransport:
    return CannedTransport({"58a1": LMFDB_58A1, "58.a1": LMFDB_58A1})


# =============================================================================
# RANDOMNESS
# =============================================================================


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator for property tests."""
    return random.Random(20240517)
