"""Tests for attested records, the record cache, the remote client and the label store."""

import json
import logging
from unittest.mock import MagicMock, patch

import httpx
import pytest

from h10_iwasawa.exceptions import (
    CacheCorruptionError,
    NetworkError,
    OfflineError,
    RecordNotFoundError,
    RecordValidationError,
)
from h10_iwasawa.ingest import (
    BUNDLED_RECORDS_DIR,
    LmfdbTransport,
    RecordCache,
    RecordStore,
    RecordTransport,
    dump_record,
    fetch_json_with_retry,
    fetch_remote,
    is_lmfdb_label,
    load_record,
    load_record_file,
    normalize_label,
    normalize_payload,
    parse_record,
    validate_record,
)

from .conftest import LMFDB_58A1, CannedTransport

LMFDB_11A2 = {
    "Clabel": "11a1",
    "lmfdb_label": "11.a2",
    "ainvs": [0, -1, 1, -10, -20],
    "conductor": 11,
    "rank": 0,
    "sha": 1,
    "torsion_structure": [5],
}
"""LMFDB 11.a2 is Cremona 11a1."""

CREMONA_11A2 = {
    "Clabel": "11a2",
    "lmfdb_label": "11.a1",
    "ainvs": [0, -1, 1, -7820, -263580],
    "conductor": 11,
    "rank": 0,
    "sha": 1,
    "torsion_structure": [],
}


def mock_response(status_code, body=None):
    response = MagicMock()
    response.status_code = status_code
    response.json.return_value = body
    return response


@pytest.mark.unit
class TestRecords:
    """Schema parsing and arithmetic cross-checks."""

    def test_bundled_records_load(self):
        labels = {load_record_file(p).label for p in BUNDLED_RECORDS_DIR.glob("*.json")}
        assert labels == {"58a1", "464f1", "61a1", "549c1", "37a1", "1216o3", "304f3"}

    def test_integer_keys(self, e58):
        assert e58.selmer_corank == {17: 1}
        assert e58.regulator_unit == {17: True}
        assert e58.tamagawa == {2: 2, 29: 1}

    def test_labels_keep_their_kind(self):
        assert normalize_label(" 58A1 ") == "58a1"
        assert normalize_label("11.A2") == "11.a2"
        assert normalize_label("11.a2") != normalize_label("11a2")
        assert is_lmfdb_label("11.a2") and not is_lmfdb_label("11a2")

    def test_record_keys(self, e58, e1216):
        assert e58.keys == {"58a1", "58.a1"}
        assert e1216.keys == {"1216o3"}

    def test_dump_is_stable(self, e58):
        text = dump_record(e58)
        assert parse_record(text) == e58
        assert dump_record(parse_record(text)) == text

    def test_isogeny_data(self, e1216):
        assert e1216.isogeny.degree == 3
        assert e1216.isogeny.kernel_x_value == 6
        assert e1216.isogeny.codomain.ainvs == (0, 0, 0, -3024, -68094)

    @pytest.mark.parametrize(
        "text",
        [
            "{not json",
            json.dumps({"schema": 2, "label": "x", "ainvs": [0, 0, 1, -1, 0], "conductor": 37}),
            json.dumps({"label": "x", "ainvs": [0, 0, 1, -1], "conductor": 37}),
            json.dumps({"label": "x", "ainvs": [0, 0, 1, -1, 0], "conductor": 37, "extra": 1}),
            json.dumps({"label": "x", "ainvs": [0, 0, 1, -1, 0], "conductor": 0}),
        ],
    )
    def test_schema_violations(self, text):
        with pytest.raises(RecordValidationError):
            parse_record(text)

    def test_conductor_mismatch(self, e58):
        with pytest.raises(RecordValidationError) as exc_info:
            validate_record(e58.model_copy(update={"conductor": 59}))
        assert exc_info.value.details["field"] == "conductor"
        assert exc_info.value.details["computed"] == 58

    def test_tamagawa_mismatch(self, e58):
        with pytest.raises(RecordValidationError) as exc_info:
            validate_record(e58.model_copy(update={"tamagawa": {2: 1, 29: 1}}))
        details = exc_info.value.details
        assert (details["field"], details["prime"], details["computed"]) == ("tamagawa", 2, 2)

    def test_singular_model(self, e58):
        with pytest.raises(RecordValidationError):
            validate_record(e58.model_copy(update={"ainvs": [0, 0, 0, 0, 0]}))

    def test_missing_file(self, tmp_path):
        with pytest.raises(RecordNotFoundError):
            load_record_file(tmp_path / "none.json")


@pytest.mark.unit
class TestRecordCache:
    """Atomic label-addressed cache."""

    def test_put_get(self, cache, e58):
        path = cache.put(e58)
        assert path.name == "58a1.json"
        assert path.parent.name == "v1"
        assert cache.get("58.a1") == e58
        assert "58a1" in cache
        assert "58.a1" in cache

    def test_miss(self, cache):
        assert cache.get("11a1") is None
        assert "11a1" not in cache

    def test_corrupted_entry_deleted(self, cache, e58):
        path = cache.put(e58)
        path.write_text("{truncated", encoding="utf-8")
        with pytest.raises(CacheCorruptionError):
            cache.get("58a1")
        assert not path.exists()

    def test_entry_failing_cross_checks_deleted(self, cache, e58):
        path = cache.put(e58)
        path.write_text(dump_record(e58.model_copy(update={"conductor": 59})), encoding="utf-8")
        with pytest.raises(CacheCorruptionError) as exc_info:
            cache.get("58a1")
        assert exc_info.value.details["field"] == "conductor"
        assert not path.exists()

    def test_schema_directories_are_separate(self, tmp_path, e58):
        RecordCache(tmp_path, schema=1).put(e58)
        assert RecordCache(tmp_path, schema=2).get("58a1") is None

    def test_no_temporary_files_left(self, cache, e58):
        cache.put(e58)
        cache.put(e58)
        assert sorted(p.name for p in cache.directory.iterdir()) == ["58.a1.json", "58a1.json"]

    def test_stats_invalidate_clear(self, cache, e58, e61):
        cache.put(e58)
        cache.put(e61)
        assert cache.get_cache_stats()["total_entries"] == 4
        cache.invalidate("58a1")
        assert "58a1" not in cache
        cache.clear()
        assert cache.get_cache_stats()["total_entries"] == 0


@pytest.mark.unit
class TestFetchRemote:
    """Cache-first fetching through a transport."""

    def test_canned_transport_is_a_transport(self, transport):
        assert isinstance(transport, RecordTransport)

    def test_normalize_payload(self):
        record = normalize_payload(LMFDB_58A1)
        assert (record.label, record.conductor, record.rank, record.sha_order) == (
            "58a1",
            58,
            1,
            1,
        )
        assert record.lmfdb_label == "58.a1"
        assert record.selmer_corank == {}
        assert record.regulator_unit == {}

    def test_requested_lmfdb_label_kept(self):
        row = {k: v for k, v in LMFDB_58A1.items() if k != "lmfdb_label"}
        assert normalize_payload(row, "58.a1").lmfdb_label == "58.a1"
        assert normalize_payload(row, "58a1").lmfdb_label is None

    def test_payload_missing_fields(self):
        with pytest.raises(RecordValidationError):
            normalize_payload({"Clabel": "58a1"})
        with pytest.raises(RecordValidationError):
            normalize_payload(["58a1"])  # type: ignore[arg-type]

    def test_fetch_then_cache_hit(self, transport, cache):
        first = fetch_remote("58.a1", transport, cache)
        second = fetch_remote("58a1", transport, cache)
        assert first == second
        assert transport.calls == ["58.a1"]
        assert "58a1" in cache

    def test_lmfdb_label_cached_under_every_label(self, cache):
        transport = CannedTransport({"11.a2": LMFDB_11A2})
        first = fetch_remote("11.a2", transport, cache)
        second = fetch_remote("11.a2", transport, cache)
        assert first == second
        assert (first.label, first.lmfdb_label) == ("11a1", "11.a2")
        assert transport.calls == ["11.a2"]
        assert "11.a2" in cache and "11a1" in cache
        assert "11a2" not in cache

    def test_cremona_record_does_not_answer_lmfdb_label(self, cache):
        cache.put(normalize_payload(CREMONA_11A2))
        transport = CannedTransport({"11.a2": LMFDB_11A2})
        assert fetch_remote("11.a2", transport, cache).ainvs == [0, -1, 1, -10, -20]
        assert transport.calls == ["11.a2"]
        assert cache.get("11a2").ainvs == [0, -1, 1, -7820, -263580]

    def test_network_failure_ignores_other_labels(self, cache):
        cache.put(normalize_payload(CREMONA_11A2))
        with pytest.raises(OfflineError):
            fetch_remote("11.a2", CannedTransport({}, fail=True), cache)

    def test_offline_cold_cache(self, transport, cache):
        with pytest.raises(OfflineError):
            fetch_remote("58a1", transport, cache, offline=True)
        assert transport.calls == []

    def test_offline_warm_cache(self, transport, cache, e58):
        cache.put(e58)
        assert fetch_remote("58a1", transport, cache, offline=True) == e58

    def test_network_failure_without_cache(self, cache):
        with pytest.raises(OfflineError):
            fetch_remote("58a1", CannedTransport({}, fail=True), cache)

    def test_unknown_label(self, transport, cache):
        with pytest.raises(RecordNotFoundError):
            fetch_remote("11a1", transport, cache)

    def test_malformed_payload_leaves_cache_untouched(self, cache):
        bad = CannedTransport({"58a1": {**LMFDB_58A1, "conductor": 59}})
        with pytest.raises(RecordValidationError):
            fetch_remote("58a1", bad, cache)
        assert "58a1" not in cache


@pytest.mark.unit
class TestLmfdbTransport:
    """httpx client with tenacity retries (network mocked)."""

    @patch("h10_iwasawa.ingest.remote.httpx.get")
    def test_query_by_label_style(self, mock_get):
        mock_get.return_value = mock_response(200, {"data": [LMFDB_58A1]})
        transport = LmfdbTransport(base_url="https://example.test/api/")
        assert transport.get("58.a1")["conductor"] == 58
        assert mock_get.call_args.kwargs["params"] == {"_format": "json", "lmfdb_label": "58.a1"}
        transport.get("58a1")
        assert mock_get.call_args.kwargs["params"] == {"_format": "json", "Clabel": "58a1"}

    @patch("h10_iwasawa.ingest.remote.httpx.get")
    def test_empty_result(self, mock_get):
        mock_get.return_value = mock_response(200, {"data": []})
        with pytest.raises(RecordNotFoundError):
            LmfdbTransport().get("11a9")

    @patch("h10_iwasawa.ingest.remote.httpx.get")
    def test_not_found_status(self, mock_get):
        mock_get.return_value = mock_response(404)
        with pytest.raises(RecordNotFoundError):
            fetch_json_with_retry("https://example.test/", {})
        mock_get.assert_called_once()

    @patch("h10_iwasawa.ingest.remote.httpx.get")
    def test_server_error_not_retried(self, mock_get):
        mock_get.return_value = mock_response(500)
        with pytest.raises(NetworkError):
            fetch_json_with_retry("https://example.test/", {})
        mock_get.assert_called_once()

    @patch("time.sleep")
    @patch("h10_iwasawa.ingest.remote.httpx.get")
    def test_retry_then_success(self, mock_get, mock_sleep, caplog):
        mock_get.side_effect = [mock_response(503), mock_response(200, {"data": [LMFDB_58A1]})]
        with caplog.at_level(logging.WARNING):
            assert LmfdbTransport().get("58a1")["ainvs"] == [1, -1, 0, -1, 1]
        assert mock_get.call_count == 2
        assert "Retry attempt 1/3" in caplog.text

    @patch("time.sleep")
    @patch("h10_iwasawa.ingest.remote.httpx.get")
    def test_retries_exhausted(self, mock_get, mock_sleep):
        mock_get.side_effect = httpx.ConnectError("connection refused")
        with pytest.raises(NetworkError):
            LmfdbTransport().get("58a1")
        assert mock_get.call_count == 3


@pytest.mark.unit
class TestRecordStore:
    """Label resolution order and twist lookup."""

    def test_bundled_before_cache(self, store, cache, e58):
        cache.put(e58.model_copy(update={"rank": 0}))
        assert store.get("58a1").rank == 1

    def test_record_dirs_first(self, tmp_path, cache, e58):
        local = tmp_path / "records"
        local.mkdir()
        (local / "58a1.json").write_text(
            dump_record(e58.model_copy(update={"sha_order": 4})), encoding="utf-8"
        )
        store = RecordStore(record_dirs=[local], cache=cache, offline=True)
        assert store.get("58.a1").sha_order == 4

    def test_offline_unknown_label(self, store):
        with pytest.raises(OfflineError):
            store.get("11a1")

    def test_lmfdb_label_resolves_bundled_record(self, store):
        assert store.get("61.a1").label == "61a1"
        with pytest.raises(OfflineError):
            store.get("58.a2")

    def test_no_transport_unknown_label(self, cache):
        store = RecordStore(cache=cache, include_bundled=False)
        with pytest.raises(RecordNotFoundError):
            store.get("11a1")
        assert store.find("11a1") is None

    def test_remote_fallback(self, cache, transport):
        store = RecordStore(cache=cache, transport=transport, include_bundled=False)
        assert store.get("58.a1").conductor == 58
        assert store.get("58a1").conductor == 58
        assert transport.calls == ["58.a1"]

    def test_find_twist_by_link(self, store, e58, e61, e1216):
        assert store.find_twist(e58, -1).label == "464f1"
        assert store.find_twist(e61, -3).label == "549c1"
        assert store.find_twist(e1216, -2).label == "304f3"

    def test_find_twist_by_model(self, tmp_path, cache, store, e58):
        unlinked = store.get("464f1").model_copy(update={"twist_of": None, "label": "464x1"})
        local = tmp_path / "records"
        local.mkdir()
        (local / "464x1.json").write_text(dump_record(unlinked), encoding="utf-8")
        only_local = RecordStore(record_dirs=[local], cache=cache, offline=True, include_bundled=False)
        assert only_local.find_twist(e58, -1).label == "464x1"

    def test_find_twist_missing(self, store, e37):
        assert store.find_twist(e37, -1) is None

    def test_invalid_local_record_skipped(self, tmp_path, cache, e58, caplog):
        local = tmp_path / "records"
        local.mkdir()
        (local / "bad.json").write_text(
            dump_record(e58.model_copy(update={"label": "bad", "conductor": 59})), encoding="utf-8"
        )
        store = RecordStore(record_dirs=[local], cache=cache, offline=True)
        with caplog.at_level(logging.WARNING):
            records = store.local_records()
        assert "bad" not in {r.label for r in records}
        assert "Skipping invalid record" in caplog.text

    def test_load_record_path_or_label(self, store):
        assert load_record(BUNDLED_RECORDS_DIR / "61a1.json").conductor == 61
        assert load_record("61a1", store=store).conductor == 61
