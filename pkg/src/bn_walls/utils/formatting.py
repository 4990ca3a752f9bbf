"""Utilities for formatting payload values for table display."""

from __future__ import annotations

from typing import Any


def _is_int_vector(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    )


def format_cell_value(value: Any) -> str:
    """
    Format a JSON-level value for a table cell.

    - None → empty string
    - Booleans → yes / no
    - Integer lists (divisor classes) → (a, b)
    - Lists of scalars → comma separated
    - Other values → stringified as-is, so numbers read exactly as in JSON
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if _is_int_vector(value):
        return "(" + ", ".join(str(v) for v in value) + ")"
    if isinstance(value, list):
        return ", ".join(format_cell_value(v) for v in value)
    return str(value)


def is_record_list(value: Any) -> bool:
    """Return True for a non-empty list whose items are all dicts."""
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)
