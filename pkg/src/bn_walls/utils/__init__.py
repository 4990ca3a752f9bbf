"""Shared utilities: logging, file output, value formatting, serialization."""

from bn_walls.utils.app_logger import get_logger, setup_logging
from bn_walls.utils.file_utils import ensure_directory, write_text_atomic
from bn_walls.utils.serialization import dumps_payload, ensure_json_safe

__all__ = [
    "get_logger",
    "setup_logging",
    "ensure_directory",
    "write_text_atomic",
    "dumps_payload",
    "ensure_json_safe",
]
