"""Utility modules for h10-iwasawa."""

from .error_handling import (
    configure_logging,
    format_user_error,
    format_user_warning,
    get_standard_logger,
    handle_operation_error,
    safe_operation,
    validate_input_path,
)

__all__ = [
    "configure_logging",
    "get_standard_logger",
    "handle_operation_error",
    "safe_operation",
    "validate_input_path",
    "format_user_error",
    "format_user_warning",
]
