"""Configuration management CLI commands."""

from pathlib import Path
from typing import Any

import click
from rich.console import Console
from rich.table import Table

from bn_walls.constants import DEFAULT_CONFIG_DIR
from bn_walls.core.config import ConfigManager
from bn_walls.utils.app_logger import get_logger

console = Console()
logger = get_logger(__name__)


class AliasedGroup(click.Group):
    """Custom Click Group that supports command aliases."""

    def get_command(self, ctx: click.Context, cmd_name: str) -> click.Command | None:
        """Override to support command aliases."""
        aliases = {
            "ls": "list",
        }
        actual_name = aliases.get(cmd_name, cmd_name)
        return super().get_command(ctx, actual_name)


def _manager(ctx: click.Context) -> ConfigManager:
    obj = ctx.find_root().obj or {}
    return ConfigManager(obj.get("config_dir", DEFAULT_CONFIG_DIR))


def _convert_value(value: str) -> Any:
    """Convert CLI string to int where possible; pydantic validates the rest."""
    try:
        return int(value)
    except ValueError:
        return value


@click.group(name="config", cls=AliasedGroup)
def config_group() -> None:
    """Manage application configuration settings."""


@config_group.command(name="get")
@click.argument("key", type=str)
@click.pass_context
def config_get(ctx: click.Context, key: str) -> None:
    """Get a configuration value."""
    try:
        value = _manager(ctx).get(key)
    except (KeyError, ValueError) as e:
        raise click.ClickException(f"Error getting config: {e}") from e
    click.echo(f"{key} = {value}")


@config_group.command(name="set")
@click.argument("key", type=str)
@click.argument("value", type=str)
@click.pass_context
def config_set(ctx: click.Context, key: str, value: str) -> None:
    """Set a configuration value and save it."""
    manager = _manager(ctx)
    try:
        manager.set(key, _convert_value(value))
        manager.save()
    except (KeyError, ValueError, OSError) as e:
        raise click.ClickException(f"Error setting config: {e}") from e
    logger.info(f"Configuration updated: {key} = {value}")
    click.echo(f"Set {key} = {manager.get(key)}")


@config_group.command(name="list")
@click.pass_context
def config_list(ctx: click.Context) -> None:
    """List all configuration settings."""
    try:
        settings = _manager(ctx).to_dict()
    except ValueError as e:
        raise click.ClickException(f"Error listing config: {e}") from e

    table = Table(title="Configuration Settings")
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Value", style="green")
    table.add_column("Type", style="dim")
    for key, value in sorted(settings.items()):
        table.add_row(key, str(value), type(value).__name__)
    console.print(table)


@config_group.command(name="reset")
@click.argument("key", type=str, required=False)
@click.option("--all", "reset_all", is_flag=True, help="Reset all configuration to defaults")
@click.pass_context
def config_reset(ctx: click.Context, key: str | None, reset_all: bool) -> None:
    """Reset configuration to default values."""
    if not key and not reset_all:
        raise click.UsageError("Give a KEY or --all")
    manager = _manager(ctx)
    try:
        if reset_all:
            manager.reset_to_defaults()
        else:
            assert key is not None
            manager.reset_key(key)
        manager.save()
    except (KeyError, ValueError, OSError) as e:
        raise click.ClickException(f"Error resetting config: {e}") from e
    click.echo("Reset all settings to defaults" if reset_all else f"Reset {key} to its default")


@config_group.command(name="path")
@click.pass_context
def config_path(ctx: click.Context) -> None:
    """Show the configuration file location."""
    click.echo(str(_manager(ctx).config_path))
