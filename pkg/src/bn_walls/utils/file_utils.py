"""File utility functions for writing generated artifacts."""

from pathlib import Path

from bn_walls.utils.app_logger import get_logger

logger = get_logger(__name__)


def ensure_directory(path: Path, *, mode: int = 0o755) -> None:
    """Ensure a directory exists, creating parents as needed.

    Args:
        path: Directory to create
        mode: Permission mode for newly created directories

    Raises:
        OSError: If the directory cannot be created
    """
    try:
        path.mkdir(mode=mode, parents=True, exist_ok=True)
    except OSError as e:
        logger.error(f"Failed to create directory {path}: {e}")
        raise


def write_text_atomic(path: Path, text: str) -> None:
    """Write text to a file through a temporary sibling and an atomic rename.

    Args:
        path: Destination file
        text: Content, written as UTF-8 with LF line endings

    Raises:
        OSError: If the file cannot be written
    """
    ensure_directory(path.parent)
    temp_path = path.with_suffix(path.suffix + ".tmp")
    try:
        with temp_path.open("w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        temp_path.replace(path)
    except OSError as e:
        logger.error(f"Failed to write {path}: {e}")
        temp_path.unlink(missing_ok=True)
        raise
    logger.debug(f"Wrote {len(text)} characters to {path}")
