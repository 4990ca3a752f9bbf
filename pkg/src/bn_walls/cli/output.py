"""Envelope output shared by every computation command."""

import sys
from collections.abc import Callable
from typing import Any

import click
from pydantic import ValidationError
from rich.console import Console

from bn_walls import __version__
from bn_walls.constants import EXIT_CONSISTENCY_ERROR, EXIT_INVALID_INPUT
from bn_walls.exceptions import ConsistencyError, InvalidInputError
from bn_walls.models.config import AppConfig
from bn_walls.models.envelope import OutputEnvelope
from bn_walls.renderers.table import TableRenderer
from bn_walls.utils.app_logger import get_logger
from bn_walls.utils.serialization import dumps_payload, to_jsonable

logger = get_logger(__name__)

Computation = Callable[[], tuple[Any, list[str]]]


def app_config(ctx: click.Context) -> AppConfig:
    obj = ctx.find_root().obj or {}
    config = obj.get("config")
    return config if isinstance(config, AppConfig) else AppConfig()


def _write_failure(
    ctx: click.Context,
    command: str,
    inputs: dict[str, Any],
    output_format: str,
    error: Exception,
    code: int,
) -> None:
    if output_format == "json":
        envelope = OutputEnvelope(
            command=command, inputs=to_jsonable(inputs), error=str(error), version=__version__
        )
        click.echo(dumps_payload(envelope.to_payload()), nl=False)
    kind = "Consistency failure" if code == EXIT_CONSISTENCY_ERROR else "Error"
    click.echo(f"{kind}: {error}", err=True)
    logger.debug(f"{command} failed with exit code {code}: {error}")
    ctx.exit(code)


def emit(
    ctx: click.Context,
    command: str,
    inputs: dict[str, Any],
    output_format: str | None,
    compute: Computation,
) -> None:
    """Run ``compute`` and write its result wrapped in an OutputEnvelope.

    Invalid input exits with code 1 and a broken identity with code 2; in both
    cases an error envelope is written in json format and a diagnostic goes to
    standard error.
    """
    fmt = output_format or app_config(ctx).default_format
    try:
        result, warnings = compute()
        envelope = OutputEnvelope(
            command=command,
            inputs=to_jsonable(inputs),
            result=to_jsonable(result),
            warnings=warnings,
            version=__version__,
        )
        text = dumps_payload(envelope.to_payload())
    except ConsistencyError as e:
        _write_failure(ctx, command, inputs, fmt, e, EXIT_CONSISTENCY_ERROR)
        return
    except (InvalidInputError, ValidationError) as e:
        _write_failure(ctx, command, inputs, fmt, e, EXIT_INVALID_INPUT)
        return

    if fmt == "json":
        click.echo(text, nl=False)
        return
    console = Console(file=sys.stdout, width=160)
    TableRenderer().render(envelope.result, console=console, title=command)
    for warning in envelope.warnings:
        click.echo(f"Warning: {warning}", err=True)
