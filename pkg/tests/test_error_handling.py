"""Tests for the exception hierarchy and the error-handling helpers."""

import logging

import pytest

from h10_iwasawa.exceptions import (
    BadReductionError,
    CacheCorruptionError,
    CriteriaError,
    CurveError,
    H10IwasawaError,
    IngestError,
    InputValidationError,
    NetworkError,
    OfflineError,
    PadicError,
    PrimeMismatchError,
    SeriesError,
    UnresolvedSelmerRatioError,
)
from h10_iwasawa.utils import (
    configure_logging,
    format_user_error,
    format_user_warning,
    get_standard_logger,
    handle_operation_error,
    safe_operation,
    validate_input_path,
)


@pytest.mark.unit
class TestExceptionHierarchy:
    """Structured exceptions."""

    def test_message_and_details(self):
        error = BadReductionError("bad reduction at 37", details={"ell": 37})
        assert str(error) == "bad reduction at 37"
        assert error.message == "bad reduction at 37"
        assert error.details == {"ell": 37}

    def test_details_default_empty(self):
        assert H10IwasawaError("x").details == {}

    @pytest.mark.parametrize(
        "error,parent",
        [
            (PrimeMismatchError, PadicError),
            (BadReductionError, CurveError),
            (UnresolvedSelmerRatioError, CriteriaError),
            (CacheCorruptionError, IngestError),
            (OfflineError, NetworkError),
            (SeriesError, H10IwasawaError),
        ],
    )
    def test_parents(self, error, parent):
        assert issubclass(error, parent)
        assert issubclass(error, H10IwasawaError)

    def test_input_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            raise InputValidationError("p must be an odd prime", details={"p": 4})


@pytest.mark.unit
class TestLoggingHelpers:
    """Logger setup."""

    def test_standard_logger_name(self):
        logger = get_standard_logger("ingest.remote")
        assert logger.name == "h10_iwasawa.ingest.remote"
        assert logger.handlers

    def test_handler_added_once(self):
        first = get_standard_logger("twice")
        count = len(first.handlers)
        assert len(get_standard_logger("twice").handlers) == count

    def test_configure_logging_levels(self):
        assert configure_logging(verbose=True).level == logging.DEBUG
        assert configure_logging(verbose=False).level == logging.WARNING


@pytest.mark.unit
class TestHandleOperationError:
    """Logging failed operations with context."""

    def test_logs_details_and_context(self, caplog):
        error = BadReductionError("bad reduction at 29", details={"ell": 29})
        with caplog.at_level(logging.ERROR):
            result = handle_operation_error(
                "point count", error, context={"curve": "58a1"}, default_return=-1
            )
        assert result == -1
        assert "point count failed" in caplog.text
        assert "ell=29" in caplog.text
        assert "curve=58a1" in caplog.text

    def test_reraise(self):
        with pytest.raises(BadReductionError):
            handle_operation_error("count", BadReductionError("bad"), reraise=True)


@pytest.mark.unit
class TestSafeOperation:
    """Exceptions turned into default values."""

    def test_success(self):
        assert safe_operation("add", lambda: 1 + 1) == 2

    def test_listed_exception_returns_default(self):
        def fail():
            raise OfflineError("offline")

        assert safe_operation("fetch", fail, exception_types=(NetworkError,), default_return=0) == 0

    def test_unlisted_exception_propagates(self):
        def fail():
            raise KeyError("x")

        with pytest.raises(KeyError):
            safe_operation("lookup", fail, exception_types=(H10IwasawaError,))


@pytest.mark.unit
class TestInputPaths:
    """User-supplied paths."""

    def test_existing_file(self, tmp_path):
        path = tmp_path / "F.json"
        path.write_text("{}", encoding="utf-8")
        assert validate_input_path(path) == path

    def test_missing_path(self, tmp_path):
        with pytest.raises(InputValidationError) as exc_info:
            validate_input_path(tmp_path / "missing.json")
        assert exc_info.value.details["operation"] == "read"

    def test_directory_required(self, tmp_path):
        path = tmp_path / "F.json"
        path.write_text("{}", encoding="utf-8")
        with pytest.raises(InputValidationError):
            validate_input_path(path, directory=True)
        assert validate_input_path(tmp_path, directory=True) == tmp_path


@pytest.mark.unit
class TestUserMessages:
    """stderr formatting."""

    def test_error_with_suggestion(self):
        text = format_user_error("58a2 not found", "run 'h10-iwasawa fetch 58a2'")
        assert text.startswith("❌ ERROR: 58a2 not found")
        assert "💡 SUGGESTION: run 'h10-iwasawa fetch 58a2'" in text

    def test_warning_without_suggestion(self):
        assert format_user_warning("t unresolved") == "⚠️  WARNING: t unresolved"
