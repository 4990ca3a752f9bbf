"""Output envelope written by every CLI command."""

from typing import Any

from pydantic import BaseModel, Field, model_validator


class OutputEnvelope(BaseModel):
    """Wrapper around one command's payload.

    ``result`` is present exactly when the command succeeded; failed commands
    carry ``error`` instead.
    """

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    warnings: list[str] = Field(default_factory=list)
    version: str
    error: str | None = None

    @model_validator(mode="after")
    def _result_xor_error(self) -> "OutputEnvelope":
        if (self.error is None) == (self.result is None):
            raise ValueError("an envelope carries either a result or an error")
        return self

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_payload(self) -> dict[str, Any]:
        """JSON data with ``result`` on success and ``error`` on failure, never both."""
        payload = self.model_dump(mode="json")
        payload.pop("error" if self.ok else "result")
        return payload
