"""Scenario sweep command."""

from typing import Any

import click

from bn_walls.cli.output import app_config, emit
from bn_walls.cli.params import format_option
from bn_walls.constants import MAX_THREAD_POOL_SIZE
from bn_walls.core.sweep import ScenarioSweep


@click.command(name="sweep")
@click.option("--e", "es", type=click.IntRange(min=0), multiple=True, help="Values of e (default 0..3)")
@click.option("--alpha", "alphas", type=click.IntRange(0, 1), multiple=True, help="Values of alpha (default 0, 1)")
@click.option("--c2-min", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("--c2-max", type=click.IntRange(min=2), default=8, show_default=True)
@click.option(
    "--workers",
    type=click.IntRange(1, MAX_THREAD_POOL_SIZE),
    default=None,
    help="Thread pool size (default: configured max_workers)",
)
@format_option
@click.pass_context
def sweep_command(
    ctx: click.Context,
    es: tuple[int, ...],
    alphas: tuple[int, ...],
    c2_min: int,
    c2_max: int,
    workers: int | None,
    output_format: str | None,
) -> None:
    """Run the Hirzebruch scenario over a grid of (e, alpha, c2, n)."""
    if c2_min > c2_max:
        raise click.UsageError(f"--c2-min {c2_min} exceeds --c2-max {c2_max}")
    e_values = list(es) or [0, 1, 2, 3]
    alpha_values = list(alphas) or [0, 1]
    pool = workers or app_config(ctx).max_workers

    def compute() -> tuple[Any, list[str]]:
        result = ScenarioSweep(max_workers=pool).run(
            e_values, alpha_values, range(c2_min, c2_max + 1)
        )
        warnings = [
            f"Separating walls not unique at (e, alpha, c2, n) = {tuple(point)}"
            for point in result.summary.non_unique
        ]
        return result, warnings

    emit(
        ctx,
        "sweep",
        {"e": e_values, "alpha": alpha_values, "c2_min": c2_min, "c2_max": c2_max},
        output_format,
        compute,
    )
