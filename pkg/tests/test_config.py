"""Unit tests for CliConfig: defaults, H10_* environment variables, overrides, validation.

All tests patch ``os.environ``; nothing reads the user's real environment.
"""

import os
from pathlib import Path
from unittest.mock import patch

import pytest

from h10_iwasawa.config import DEFAULT_JOBS, CliConfig
from h10_iwasawa.constants import (
    DEFAULT_CACHE_DIR,
    DEFAULT_CAP,
    DEFAULT_PRECISION,
    ENV_BASE_URL,
    ENV_CACHE_DIR,
    ENV_CAP,
    ENV_JOBS,
    ENV_OFFLINE,
    ENV_PRECISION,
    FORMAT_JSON,
    FORMAT_TABLE,
    LMFDB_API_BASE,
)


@pytest.mark.unit
class TestCliConfig:
    """Test CliConfig dataclass."""

    def test_default_values(self):
        config = CliConfig()
        assert config.precision == DEFAULT_PRECISION
        assert config.cap == DEFAULT_CAP
        assert config.cache_dir == DEFAULT_CACHE_DIR
        assert config.base_url == LMFDB_API_BASE
        assert config.offline is False
        assert config.output_format == FORMAT_TABLE
        assert config.jobs == DEFAULT_JOBS
        assert config.record_dirs == ()

    def test_frozen(self):
        with pytest.raises(AttributeError):
            CliConfig().precision = 5  # type: ignore[misc]


@pytest.mark.unit
class TestCliConfigFromEnv:
    """Test CliConfig.from_env()."""

    def test_empty_environment_gives_defaults(self):
        with patch.dict(os.environ, {}, clear=True):
            assert CliConfig.from_env() == CliConfig()

    def test_reads_every_variable(self, tmp_path):
        env_vars = {
            ENV_PRECISION: "30",
            ENV_CAP: "8",
            ENV_CACHE_DIR: str(tmp_path),
            ENV_BASE_URL: "https://mirror.example/api/",
            ENV_OFFLINE: "1",
            ENV_JOBS: "2",
        }
        with patch.dict(os.environ, env_vars, clear=True):
            config = CliConfig.from_env()
        assert (config.precision, config.cap, config.jobs) == (30, 8, 2)
        assert config.cache_dir == tmp_path
        assert config.base_url == "https://mirror.example/api/"
        assert config.offline is True

    @pytest.mark.parametrize("raw,expected", [("true", True), ("YES", True), ("0", False), ("", False)])
    def test_offline_values(self, raw, expected):
        with patch.dict(os.environ, {ENV_OFFLINE: raw}, clear=True):
            assert CliConfig.from_env().offline is expected

    @pytest.mark.parametrize("name", [ENV_PRECISION, ENV_CAP, ENV_JOBS])
    def test_non_integer_rejected(self, name):
        with patch.dict(os.environ, {name: "many"}, clear=True):
            with pytest.raises(ValueError, match=name):
                CliConfig.from_env()

    def test_empty_integer_uses_default(self):
        with patch.dict(os.environ, {ENV_PRECISION: ""}, clear=True):
            assert CliConfig.from_env().precision == DEFAULT_PRECISION


@pytest.mark.unit
class TestOverridesAndValidation:
    """Test CLI overrides and range checks."""

    def test_none_overrides_ignored(self):
        config = CliConfig().with_overrides(precision=None, cap=6, output_format=FORMAT_JSON)
        assert config.precision == DEFAULT_PRECISION
        assert config.cap == 6
        assert config.output_format == FORMAT_JSON

    def test_paths_converted(self):
        config = CliConfig().with_overrides(cache_dir="~/h10", record_dirs=["a", "b"])
        assert config.cache_dir == Path("~/h10").expanduser()
        assert config.record_dirs == (Path("a"), Path("b"))

    def test_defaults_validate(self):
        CliConfig().validate()

    @pytest.mark.parametrize(
        "overrides,message",
        [
            ({"precision": 0}, "precision"),
            ({"cap": 0}, "cap"),
            ({"jobs": 0}, "jobs"),
            ({"output_format": "xml"}, "output_format"),
            ({"base_url": ""}, "base_url"),
        ],
    )
    def test_out_of_range(self, overrides, message):
        config = CliConfig(**overrides)
        with pytest.raises(ValueError, match=message):
            config.validate()
