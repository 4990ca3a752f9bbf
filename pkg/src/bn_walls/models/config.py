"""Application configuration data model."""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field

from bn_walls.constants import (
    DEFAULT_MAX_WORKERS,
    DEFAULT_OUTPUT_FORMAT,
    MAX_THREAD_POOL_SIZE,
    SVG_CANVAS,
    SVG_PRECISION,
)


class AppConfig(BaseModel):
    """User preferences read from ``config.json``.

    Attributes:
        default_format: Output format used when --format is not given
        svg_canvas: Width and height of the cone figure in pixels
        svg_precision: Decimal places of SVG coordinates
        max_workers: Thread pool size of the scenario sweep
        search_inflation: Factor widening the destabilizer search box
        log_file: Optional rotating log file
    """

    default_format: Literal["json", "table"] = Field(default=DEFAULT_OUTPUT_FORMAT)
    svg_canvas: int = Field(default=SVG_CANVAS, ge=200, le=4000)
    svg_precision: int = Field(default=SVG_PRECISION, ge=0, le=8)
    max_workers: int = Field(default=DEFAULT_MAX_WORKERS, ge=1, le=MAX_THREAD_POOL_SIZE)
    search_inflation: int = Field(default=1, ge=1, le=8)
    log_file: Path | None = Field(default=None)

    model_config = {
        "validate_assignment": True,
        "json_schema_extra": {
            "examples": [
                {
                    "default_format": "table",
                    "svg_canvas": 600,
                    "svg_precision": 3,
                    "max_workers": 8,
                    "search_inflation": 1,
                    "log_file": None,
                }
            ]
        },
    }
