"""Test package structure and imports."""

from pathlib import Path

import pytest

import h10_iwasawa


def test_package_import():
    assert h10_iwasawa is not None


def test_main_exports():
    expected_exports = [
        "h10_check",
        "euler_char_check",
        "s_primes",
        "isogeny3_density",
        "twist_selmer_report",
        "excluded_line",
        "RecordStore",
        "CliConfig",
    ]
    for export in expected_exports:
        assert hasattr(h10_iwasawa, export), f"Missing export: {export}"
    assert set(h10_iwasawa.__all__) >= set(expected_exports)


def test_version_available():
    parts = h10_iwasawa.__version__.split(".")
    assert len(parts) == 3
    assert all(part.isdigit() for part in parts)


def test_package_structure():
    package_path = Path(h10_iwasawa.__file__).parent
    for dir_name in ["constants", "criteria", "curves", "ingest", "padic", "series", "utils"]:
        dir_path = package_path / dir_name
        assert dir_path.is_dir(), f"Missing directory: {dir_name}"
        assert (dir_path / "__init__.py").exists(), f"Missing __init__.py in {dir_name}"
    assert (package_path / "py.typed").exists()


def test_bundled_records_shipped():
    records = Path(h10_iwasawa.__file__).parent / "data" / "records"
    assert len(list(records.glob("*.json"))) == 7


def test_no_syntax_errors():
    package_path = Path(h10_iwasawa.__file__).parent
    for py_file in package_path.rglob("*.py"):
        try:
            compile(py_file.read_text(encoding="utf-8"), str(py_file), "exec")
        except SyntaxError as e:
            pytest.fail(f"Syntax error in {py_file}: {e}")
