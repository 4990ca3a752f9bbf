"""Application-wide constants and configuration values."""

from pathlib import Path
from typing import Final

# Exit Codes
EXIT_SUCCESS: Final[int] = 0
EXIT_INVALID_INPUT: Final[int] = 1
EXIT_CONSISTENCY_ERROR: Final[int] = 2

# Default Paths
DEFAULT_CONFIG_DIR: Final[Path] = Path.home() / ".bn-walls"
DEFAULT_CONFIG_FILE: Final[str] = "config.json"
CONFIG_DIR_ENVVAR: Final[str] = "BN_WALLS_CONFIG_DIR"

# Output
DEFAULT_OUTPUT_FORMAT: Final[str] = "json"
OUTPUT_FORMATS: Final[tuple[str, ...]] = ("json", "table")
JSON_SAFE_INTEGER: Final[int] = 2**53 - 1

# Cone figure
SVG_CANVAS: Final[int] = 600
SVG_MARGIN: Final[int] = 50
SVG_PRECISION: Final[int] = 3

# Concurrency Limits
DEFAULT_MAX_WORKERS: Final[int] = 4
MAX_THREAD_POOL_SIZE: Final[int] = 32

# Logging Configuration
LOG_MAX_BYTES: Final[int] = 10 * 1024 * 1024  # 10 MB
LOG_BACKUP_COUNT: Final[int] = 5

# Surface labels accepted by --surface
SURFACE_PATTERN: Final[str] = r"^(?:[fF](\d+)|[pP]2)$"
