"""
Error handling and logging helpers shared by the library and the CLI.

Errors are raised as ``h10_iwasawa.exceptions`` types; this module logs them in one
format, converts per-item failures into skipped rows, and renders stderr messages.
"""

import logging
import traceback
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Type, TypeVar, Union

from ..exceptions import InputValidationError

T = TypeVar("T")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_standard_logger(module_name: str, level: int = logging.INFO) -> logging.Logger:
    """Get a logger named ``h10_iwasawa.<module_name>`` with the standard stream handler."""
    name = f"h10_iwasawa.{module_name}" if module_name else "h10_iwasawa"
    logger = logging.getLogger(name)

    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(level)

    return logger


def configure_logging(verbose: bool = False) -> logging.Logger:
    """Attach the standard handler to the package root logger.

    Module loggers created with ``logging.getLogger(__name__)`` propagate here.
    """
    return get_standard_logger("", level=logging.DEBUG if verbose else logging.WARNING)


def handle_operation_error(
    operation_name: str,
    exception: Exception,
    context: Optional[Dict[str, Any]] = None,
    logger: Optional[logging.Logger] = None,
    reraise: bool = False,
    default_return: Any = None,
) -> Any:
    """
    Log a failed operation with its context.

    Args:
        operation_name: Human-readable operation description
        exception: The caught exception
        context: Extra key/value pairs (label, p, d, ...)
        logger: Logger instance (uses default if None)
        reraise: Whether to re-raise the exception after logging
        default_return: Value to return if not re-raising

    Returns:
        default_return value, or re-raises if reraise=True
    """
    if logger is None:
        logger = logging.getLogger("h10_iwasawa.error_handler")

    merged: Dict[str, Any] = dict(getattr(exception, "details", {}) or {})
    merged.update(context or {})
    context_str = ""
    if merged:
        context_str = " (Context: " + ", ".join(f"{k}={v}" for k, v in merged.items()) + ")"

    logger.error(f"❌ {operation_name} failed: {exception}{context_str}")

    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"Full traceback: {traceback.format_exc()}")

    if reraise:
        raise exception

    return default_return


def safe_operation(
    operation_name: str,
    func: Callable[[], T],
    context: Optional[Dict[str, Any]] = None,
    logger: Optional[logging.Logger] = None,
    exception_types: Tuple[Type[BaseException], ...] = (Exception,),
    default_return: Any = None,
    reraise: bool = False,
) -> Union[T, Any]:
    """
    Execute ``func`` and turn listed exceptions into a logged ``default_return``.

    Args:
        operation_name: Human-readable operation description
        func: Zero-argument callable to execute
        context: Extra key/value pairs for the log line
        logger: Logger instance (uses default if None)
        exception_types: Exception types to catch
        default_return: Value to return on error
        reraise: Whether to re-raise caught exceptions

    Returns:
        Function result or default_return on error
    """
    try:
        return func()
    except exception_types as e:
        return handle_operation_error(
            operation_name=operation_name,
            exception=e,  # type: ignore[arg-type]
            context=context,
            logger=logger,
            reraise=reraise,
            default_return=default_return,
        )


def validate_input_path(
    file_path: Union[str, Path], operation: str = "read", directory: bool = False
) -> Path:
    """
    Check that a user-supplied path exists (and is a directory if requested).

    Raises:
        InputValidationError: If the path is missing or of the wrong kind
    """
    path = Path(file_path).expanduser()
    if not path.exists():
        raise InputValidationError(
            f"Path not found: {path}", details={"operation": operation, "path": str(path)}
        )
    if directory and not path.is_dir():
        raise InputValidationError(
            f"Not a directory: {path}", details={"operation": operation, "path": str(path)}
        )
    return path


def format_user_error(message: str, suggestion: Optional[str] = None) -> str:
    """Format a user-facing error message, optionally with a suggestion line."""
    formatted = f"❌ ERROR: {message}"
    if suggestion:
        formatted += f"\n💡 SUGGESTION: {suggestion}"
    return formatted


def format_user_warning(message: str, suggestion: Optional[str] = None) -> str:
    """Format a user-facing warning message, optionally with a suggestion line."""
    formatted = f"⚠️  WARNING: {message}"
    if suggestion:
        formatted += f"\n💡 SUGGESTION: {suggestion}"
    return formatted
