"""JSON encoding of command payloads.

Payloads are dumped through pydantic (``mode="json"``) and encoded with orjson so
repeated invocations produce byte-identical output.
"""

from typing import Any

import orjson
from pydantic import BaseModel

from bn_walls.constants import JSON_SAFE_INTEGER
from bn_walls.exceptions import ConsistencyError


def to_jsonable(value: Any) -> Any:
    """Convert models (and containers of models) into plain JSON data."""
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def ensure_json_safe(value: Any, path: str = "$") -> None:
    """Reject integers outside the range a JSON consumer can hold exactly.

    Raises:
        ConsistencyError: If an integer exceeds 2^53 - 1 in absolute value
    """
    if isinstance(value, bool):
        return
    if isinstance(value, int):
        if abs(value) > JSON_SAFE_INTEGER:
            raise ConsistencyError(f"Integer at {path} exceeds the 53-bit safe range: {value}")
        return
    if isinstance(value, dict):
        for key, item in value.items():
            ensure_json_safe(item, f"{path}.{key}")
    elif isinstance(value, list):
        for idx, item in enumerate(value):
            ensure_json_safe(item, f"{path}[{idx}]")


def dumps_payload(value: Any) -> str:
    """Encode a payload as indented JSON text with a trailing newline."""
    data = to_jsonable(value)
    ensure_json_safe(data)
    return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE).decode(
        "utf-8"
    )


def loads_payload(text: str | bytes) -> Any:
    """Decode JSON text produced by :func:`dumps_payload`."""
    return orjson.loads(text)
