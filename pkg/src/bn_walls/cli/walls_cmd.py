"""Commands for walls, crossings and the Hirzebruch scenario."""

from typing import Any

import click

from bn_walls.cli.output import emit
from bn_walls.cli.params import DIVISOR, format_option, resolve_surface, surface_options
from bn_walls.core.crossing import crossing_report, hirzebruch_scenario
from bn_walls.core.walls import enumerate_walls, is_wall_class, separating_walls
from bn_walls.models.surface import DivisorClass, Surface


@click.command(name="walls")
@surface_options
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class")
@click.option("--c2", type=int, required=True, help="Second Chern class")
@click.option(
    "--between",
    type=(DIVISOR, DIVISOR),
    default=None,
    help="Only walls separating two ample classes L1 L2",
)
@click.option("--check", "check", type=DIVISOR, default=None, help="Test a single class ξ")
@format_option
@click.pass_context
def walls_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    c1: DivisorClass,
    c2: int,
    between: tuple[DivisorClass, DivisorClass] | None,
    check: DivisorClass | None,
    output_format: str | None,
) -> None:
    """Enumerate walls of type (c1, c2), or test/separate with --check/--between."""
    if between is not None and check is not None:
        raise click.UsageError("--between and --check are mutually exclusive")
    s = resolve_surface(surface, e)
    inputs: dict[str, Any] = {"surface": s.label, "c1": c1, "c2": c2}

    def compute() -> tuple[Any, list[str]]:
        if check is not None:
            return is_wall_class(s, check, c1, c2), []
        if between is not None:
            return separating_walls(s, c1, c2, between[0], between[1]), []
        return enumerate_walls(s, c1, c2), []

    if between is not None:
        inputs["between"] = list(between)
    if check is not None:
        inputs["check"] = check
    emit(ctx, "walls", inputs, output_format, compute)


@click.command(name="cross")
@surface_options
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class")
@click.option("--c2", type=int, required=True, help="Second Chern class")
@click.option("--from", "from_pol", type=DIVISOR, required=True, help="Polarization L1")
@click.option("--to", "to_pol", type=DIVISOR, required=True, help="Polarization L2")
@format_option
@click.pass_context
def cross_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    c1: DivisorClass,
    c2: int,
    from_pol: DivisorClass,
    to_pol: DivisorClass,
    output_format: str | None,
) -> None:
    """Families removed from M_{L2} and added to form M_{L1}."""
    s = resolve_surface(surface, e)

    def compute() -> tuple[Any, list[str]]:
        report = crossing_report(s, c1, c2, from_pol, to_pol)
        warnings: list[str] = []
        if report.hyperplanes > 1:
            warnings.append(
                f"{report.hyperplanes} wall hyperplanes separate the polarizations; "
                "the decomposition applies one wall at a time"
            )
        warnings.extend(f"E_xi for xi={f.xi} is empty" for f in report.removed + report.added if f.empty)
        return report, warnings

    emit(
        ctx,
        "cross",
        {"surface": s.label, "c1": c1, "c2": c2, "from": from_pol, "to": to_pol},
        output_format,
        compute,
    )


@click.command(name="hirzebruch")
@click.option("--e", "e", type=click.IntRange(min=0), required=True, help="Hirzebruch invariant")
@click.option("--alpha", type=int, required=True, help="c1 = C0 + alpha F, alpha in {0, 1}")
@click.option("--c2", type=int, required=True, help="Second Chern class, at least 2")
@click.option("--n", "n", type=int, required=True, help="Crossing index, 1 <= n <= c2 - 1")
@format_option
@click.pass_context
def hirzebruch_command(
    ctx: click.Context, e: int, alpha: int, c2: int, n: int, output_format: str | None
) -> None:
    """The crossing between L_n and L_{n+1} and its Brill-Noether identifications."""

    def compute() -> tuple[Any, list[str]]:
        scenario = hirzebruch_scenario(e, alpha, c2, n)
        return scenario, list(scenario.warnings)

    emit(ctx, "hirzebruch", {"e": e, "alpha": alpha, "c2": c2, "n": n}, output_format, compute)
