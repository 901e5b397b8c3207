"""End-to-end tests of the h10-iwasawa command line, run in-process through ``main``.

Every invocation passes ``--cache-dir`` under tmp_path; network access is either
disabled with ``--offline`` or served by a canned transport.
"""

import json
from fractions import Fraction
from unittest.mock import patch

import pytest

from h10_iwasawa import __version__
from h10_iwasawa.cli import main
from h10_iwasawa.constants import (
    ENV_BASE_URL,
    ENV_CACHE_DIR,
    ENV_CAP,
    ENV_JOBS,
    ENV_OFFLINE,
    ENV_PRECISION,
)
from h10_iwasawa.ingest import dump_record
from h10_iwasawa.series import BivariateSeries, UnivariateSeries, binomial_series

from .conftest import CannedTransport, LMFDB_58A1


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in (ENV_CACHE_DIR, ENV_BASE_URL, ENV_OFFLINE, ENV_PRECISION, ENV_CAP, ENV_JOBS):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def run(tmp_path, capsys):
    """Run the CLI offline; returns (exit code, stdout, stderr)."""

    def _run(*argv, offline=True):
        extra = ["--cache-dir", str(tmp_path / "cache")]
        if offline:
            extra.append("--offline")
        code = main([*argv, *extra])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def write_series(tmp_path, coeffs, p, precision, cap):
    path = tmp_path / "F.json"
    series = BivariateSeries.from_dict(coeffs, p, precision, cap)
    path.write_text(json.dumps(series.to_json()), encoding="utf-8")
    return str(path)


@pytest.mark.integration
class TestCheckCommand:
    """h10-iwasawa check."""

    def test_satisfied(self, run):
        code, out, _ = run("check", "--curve", "58a1", "--p", "17", "--d", "-1")
        assert code == 0
        assert "satisfied" in out
        assert "464f1" in out
        assert "a_17 = -4" in out

    def test_json_output(self, run):
        code, out, _ = run("check", "--curve", "58a1", "--p", "17", "--d", "-1", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["h10gen"] == "satisfied"
        assert payload["twist_label"] == "464f1"
        assert payload["lambda_cyc_K"] == 1

    def test_missing_twist_exits_two(self, run):
        code, out, _ = run("check", "--curve", "58a1", "--p", "17", "--d", "-2")
        assert code == 2
        assert "not-established" in out

    def test_series_names_excluded_line(self, run, tmp_path):
        F = write_series(tmp_path, {(0, 0): 17, (1, 0): 3, (0, 1): 1}, 17, 6, 4)
        code, out, _ = run(
            "check", "--curve", "58a1", "--p", "17", "--d", "-1", "--series", F, "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["excluded_line"] == "(1:6)"

    def test_curve_given_as_path(self, run, tmp_path, e61):
        path = tmp_path / "mine.json"
        path.write_text(dump_record(e61), encoding="utf-8")
        code, out, _ = run("check", "--curve", str(path), "--p", "11", "--d", "-3")
        assert code == 0
        assert "549c1" in out

    def test_extra_record_directory(self, run, tmp_path, e58):
        records = tmp_path / "records"
        records.mkdir()
        (records / "58x9.json").write_text(
            dump_record(e58.model_copy(update={"label": "58x9"})), encoding="utf-8"
        )
        code, _, _ = run(
            "check", "--curve", "58x9", "--p", "17", "--d", "-1", "--records", str(records)
        )
        assert code == 0

    def test_missing_record_offline(self, run):
        code, out, err = run("check", "--curve", "11a1", "--p", "17", "--d", "-1")
        assert code == 1
        assert out == ""
        assert "ERROR" in err
        assert "fetch" in err


@pytest.mark.integration
class TestSprimesCommand:
    """h10-iwasawa sprimes."""

    def test_example(self, run):
        code, out, _ = run("sprimes", "--curve", "37a1", "--k0", "-7", "--p", "11", "--bound", "700")
        assert code == 0
        assert out.strip() == "53 149 337 373 613"

    def test_family(self, run):
        code, out, _ = run(
            "sprimes", "--curve", "37a1", "--k0", "-7", "--p", "11", "--bound", "1000", "--family"
        )
        assert code == 0
        assert "m = 53, d = -371" in out

    def test_json(self, run):
        code, out, _ = run(
            "sprimes", "--curve", "37a1", "--k0", "-7", "--p", "11", "--bound", "54",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["primes"] == [53]
        assert payload["K0"] == {"d": -7, "disc": -7, "height": 7}
        assert payload["catalogued"] is True

    def test_json_uncatalogued_choice(self, run):
        code, out, _ = run(
            "sprimes", "--curve", "37a1", "--k0", "-7", "--p", "13", "--bound", "54",
            "--format", "json",
        )
        assert json.loads(out)["catalogued"] is False

    def test_preconditions_not_established(self, run):
        code, _, err = run("sprimes", "--curve", "58a1", "--k0", "-7", "--p", "17", "--bound", "100")
        assert code == 2
        assert "WARNING" in err


@pytest.mark.integration
class TestDensityCommand:
    """h10-iwasawa density."""

    def test_kriz_li_formula(self, run):
        code, out, _ = run("density", "kriz-li", "--image", "S3", "--k", "1")
        assert code == 0
        assert out.strip() == "1/12 ≈ 0.083333"

    def test_isogeny3(self, run):
        code, out, _ = run("density", "isogeny3", "--N", "209")
        assert code == 0
        assert out.strip() == "209/1440 ≈ 0.145139"

    def test_kriz_li_from_curve(self, run):
        code, out, _ = run("density", "kriz-li", "--curve", "37a1", "--k0", "-7", "--format", "json")
        payload = json.loads(out)
        assert (payload["density"], payload["decimal"]) == ("1/12", 0.083333)

    def test_unsupported_image(self, run):
        code, _, err = run("density", "kriz-li", "--image", "Z/2", "--k", "1")
        assert code == 1
        assert "SUGGESTION" in err

    def test_not_semistable(self, run):
        code, _, _ = run("density", "isogeny3", "--N", "1216")
        assert code == 1

    def test_missing_arguments(self, run):
        code, _, err = run("density", "kriz-li")
        assert code == 1
        assert "--image" in err


@pytest.mark.integration
class TestSeriesCommands:
    """h10-iwasawa series ..."""

    def test_line(self, run):
        code, out, _ = run("series", "line", "--a", "1", "--b", "0")
        assert code == 0
        assert out.strip() == "X"

    def test_solve_matches_binomial(self, run):
        code, out, _ = run(
            "series", "solve", "--a", "2", "--b", "1", "--p", "5", "--cap", "6", "--format", "json"
        )
        assert code == 0
        oracle = binomial_series(Fraction(-1, 2), 6, prime=5, precision=20)
        expected = oracle - UnivariateSeries.from_coefficients([1], 5, 20, 6)
        assert json.loads(out) == expected.to_json()

    def test_solve_rejects_non_unit_a(self, run):
        code, _, _ = run("series", "solve", "--a", "5", "--b", "1", "--p", "5")
        assert code == 1

    def test_excluded(self, run, tmp_path):
        F = write_series(tmp_path, {(0, 0): 5, (0, 1): 1, (1, 0): 5}, 5, 10, 4)
        code, out, _ = run("series", "excluded", "--F", F)
        assert code == 0
        assert out.strip() == "(0:1)"

    def test_invariants_one_line(self, run, tmp_path):
        F = write_series(tmp_path, {(0, 0): 5, (0, 1): 1, (1, 0): 5}, 5, 10, 4)
        code, out, _ = run("series", "invariants", "--F", F, "--a", "1", "--b", "0")
        assert code == 0
        assert out.strip() == "mu=0, lambda=1"

    def test_invariants_all_lines(self, run, tmp_path):
        F = write_series(tmp_path, {(0, 0): 5, (0, 1): 1, (1, 0): 5}, 5, 10, 4)
        code, out, _ = run("series", "invariants", "--F", F, "--all-lines", "--format", "json")
        rows = json.loads(out)["lines"]
        assert code == 0
        assert len(rows) == 6
        assert [r["line"] for r in rows if r["lambda"] != 1] == ["(0:1)"]

    def test_specialize(self, run, tmp_path):
        F = write_series(tmp_path, {(0, 0): 5, (1, 0): 2, (0, 1): 3}, 5, 4, 3)
        code, out, _ = run("series", "specialize", "--F", F, "--a", "0", "--b", "1")
        assert code == 0
        assert out.strip() == "5 + 2*T"

    def test_missing_series_file(self, run, tmp_path):
        code, _, err = run("series", "excluded", "--F", str(tmp_path / "none.json"))
        assert code == 1
        assert "not found" in err


@pytest.mark.integration
class TestScanAndSelmerCommands:
    """h10-iwasawa scan and selmer."""

    def test_scan(self, run):
        code, out, _ = run("scan", "--curve", "58a1", "--p", "17", "--d", "-1", "-2", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert [row["status"] for row in payload["rows"]] == ["satisfied", "unknown"]
        assert payload["summary"]["satisfied_fraction"] == "1/2"

    def test_scan_range_table(self, run):
        code, out, _ = run("scan", "--curve", "58a1", "--p", "17", "--d-min", "-10", "--d-max", "-1")
        assert code == 0
        assert "attempted" in out

    def test_selmer_parity_from_twist_record(self, run):
        code, out, _ = run("selmer", "--curve", "1216o3", "--d", "-2", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert (payload["t"], payload["in_T0prime"]) == (0, True)

    def test_selmer_explicit_parity(self, run):
        code, out, _ = run(
            "selmer", "--curve", "1216o3", "--d", "-2", "--parity", "1", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["t"] == 1

    def test_selmer_unresolved(self, run):
        code, out, _ = run("selmer", "--curve", "1216o3", "--d", "-5")
        assert code == 2
        assert "unresolved" in out

    def test_selmer_without_isogeny(self, run):
        code, _, _ = run("selmer", "--curve", "58a1", "--d", "-1")
        assert code == 1


@pytest.mark.integration
class TestFetchAndUsage:
    """h10-iwasawa fetch, parser errors and --version."""

    def test_fetch(self, run, tmp_path):
        transport = CannedTransport({"58a1": LMFDB_58A1})
        with patch("h10_iwasawa.ingest.store.LmfdbTransport", return_value=transport):
            code, out, _ = run("fetch", "--curve", "58a1", offline=False)
        assert code == 0
        assert out.startswith("58a1 -> ")
        assert (tmp_path / "cache" / "v1" / "58a1.json").is_file()
        assert transport.calls == ["58a1"]

    def test_fetch_offline_cold_cache(self, run):
        code, _, err = run("fetch", "--curve", "58a1")
        assert code == 1
        assert "offline" in err

    def test_usage_error_exits_one(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["check", "--p", "17"])
        assert exc_info.value.code == 1

    def test_bad_choice_exits_one(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["density", "kriz-li", "--format", "xml"])
        assert exc_info.value.code == 1

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert __version__ in capsys.readouterr().out
