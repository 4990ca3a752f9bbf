"""Main CLI entry point using Click framework."""

import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import click

from bn_walls import __version__
from bn_walls.constants import (
    CONFIG_DIR_ENVVAR,
    DEFAULT_CONFIG_DIR,
    EXIT_INVALID_INPUT,
    EXIT_SUCCESS,
)
from bn_walls.core.config import ConfigManager
from bn_walls.models.config import AppConfig
from bn_walls.utils.app_logger import get_logger, setup_logging

logger = get_logger(__name__)


class AliasedGroup(click.Group):
    """Custom Click Group that supports command aliases."""

    def get_command(self, ctx: click.Context, cmd_name: str) -> click.Command | None:
        """Override to support command aliases."""
        aliases = {
            "rho": "bn",
            "dim": "moduli-dim",
            "svg": "cone-svg",
            "crossing": "cross",
        }
        actual_name = aliases.get(cmd_name, cmd_name)
        return super().get_command(ctx, actual_name)


@click.group(cls=AliasedGroup)
@click.version_option(version=__version__, prog_name="bn-walls")
@click.option(
    "--config-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=DEFAULT_CONFIG_DIR,
    help="Configuration directory path",
    envvar=CONFIG_DIR_ENVVAR,
)
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.option(
    "--log-file",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write a rotating debug log to this file",
)
@click.pass_context
def cli(ctx: click.Context, config_dir: Path, verbose: bool, log_file: Path | None) -> None:
    """Brill-Noether and wall-crossing numerology of rank-2 bundles.

    Exact computations on Hirzebruch surfaces F_e and P^2 (and the instanton
    case on P^3): Euler characteristics, moduli dimensions, Brill-Noether
    numbers, walls in the ample cone, crossing reports and stability checks.
    """
    ctx.ensure_object(dict)
    ctx.obj["config_dir"] = config_dir

    try:
        config = ConfigManager(config_dir).load()
    except ValueError as e:
        click.echo(f"Warning: {e}; using defaults", err=True)
        config = AppConfig()
    ctx.obj["config"] = config

    try:
        setup_logging(
            log_file or config.log_file,
            console_level=logging.DEBUG if verbose else logging.WARNING,
        )
    except OSError as e:
        click.echo(f"Warning: Could not initialize logging: {e}", err=True)
    logger.debug("bn-walls %s, config dir %s", __version__, config_dir)


# Import command modules
from bn_walls.cli.config_cmd import config_group  # noqa: E402
from bn_walls.cli.figure_cmd import cone_svg_command  # noqa: E402
from bn_walls.cli.invariants_cmd import (  # noqa: E402
    bn_command,
    bn_defined_command,
    chi_command,
    classical_bn_command,
    gh_bounds_command,
    instanton_command,
    moduli_dim_command,
    quadric_command,
)
from bn_walls.cli.stability_cmd import stability_command  # noqa: E402
from bn_walls.cli.sweep_cmd import sweep_command  # noqa: E402
from bn_walls.cli.walls_cmd import cross_command, hirzebruch_command, walls_command  # noqa: E402

# Register commands
for command in (
    chi_command,
    moduli_dim_command,
    bn_command,
    bn_defined_command,
    gh_bounds_command,
    walls_command,
    cross_command,
    hirzebruch_command,
    quadric_command,
    instanton_command,
    stability_command,
    cone_svg_command,
    sweep_command,
    classical_bn_command,
    config_group,
):
    cli.add_command(command)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI on ``argv`` and return the process exit code.

    Exit codes: 0 success, 1 invalid input or usage error, 2 consistency failure.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        rv = cli.main(args=args, prog_name="bn-walls", standalone_mode=False, obj={})
    except click.ClickException as e:
        e.show()
        return EXIT_INVALID_INPUT
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_INVALID_INPUT
    except OSError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_INVALID_INPUT
    return rv if isinstance(rv, int) else EXIT_SUCCESS


def main() -> int:
    """Main entry point for CLI."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
