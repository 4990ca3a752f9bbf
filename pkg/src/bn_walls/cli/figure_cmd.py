"""Ample-cone figure command."""

from pathlib import Path
from typing import Any

import click

from bn_walls.cli.output import app_config, emit
from bn_walls.cli.params import DIVISOR, GRID_POINT, format_option, resolve_surface, surface_options
from bn_walls.core.crossing import hirzebruch_polarizations
from bn_walls.core.walls import enumerate_walls
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.renderers.cone_svg import render_cone_svg, write_cone_svg


def _scenario_marks(point: tuple[int, int, int, int]) -> list[tuple[str, DivisorClass]]:
    e, alpha, c2, n = point
    l_n, l_next, _ = hirzebruch_polarizations(e, alpha, c2, n)
    return [(f"L{n}", l_n), (f"L{n + 1}", l_next)]


@click.command(name="cone-svg")
@surface_options
@click.option("--c1", type=DIVISOR, default=None, help="First Chern class")
@click.option("--c2", type=int, default=None, help="Second Chern class")
@click.option("--pol", "polarizations", type=DIVISOR, multiple=True, help="Polarization (repeatable)")
@click.option("--scenario", type=GRID_POINT, default=None, help="Draw the L_n / L_{n+1} crossing")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="SVG file to write (default: embed the SVG in the result)",
)
@format_option
@click.pass_context
def cone_svg_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    c1: DivisorClass | None,
    c2: int | None,
    polarizations: tuple[DivisorClass, ...],
    scenario: tuple[int, int, int, int] | None,
    out: Path | None,
    output_format: str | None,
) -> None:
    """Draw the ample cone of F_e with the walls of type (c1, c2)."""
    config = app_config(ctx)
    if scenario is not None:
        if c1 is not None or c2 is not None or polarizations or surface is not None or e is not None:
            raise click.UsageError("--scenario fixes the surface, c1, c2 and polarizations")
        s = Surface.hirzebruch(scenario[0])
        first, second = DivisorClass.of(1, scenario[1]), scenario[2]
        inputs: dict[str, Any] = {"scenario": list(scenario)}
    else:
        if c1 is None or c2 is None:
            raise click.UsageError("Give --c1 and --c2, or --scenario e,alpha,c2,n")
        s = resolve_surface(surface, e)
        first, second = c1, c2
        inputs = {"surface": s.label, "c1": first, "c2": second, "polarizations": list(polarizations)}
    inputs["out"] = str(out) if out is not None else None

    def compute() -> tuple[Any, list[str]]:
        if scenario is not None:
            marks = _scenario_marks(scenario)
        else:
            marks = [(f"L{i}", pol) for i, pol in enumerate(polarizations, start=1)]
        document = render_cone_svg(
            s, first, second, marks, canvas=config.svg_canvas, precision=config.svg_precision
        )
        if out is not None:
            write_cone_svg(out, document)
        return {
            "path": str(out) if out is not None else None,
            "walls": [w.xi for w in enumerate_walls(s, first, second)],
            "polarizations": [{"label": label, "class": pol} for label, pol in marks],
            "bytes": len(document.encode("utf-8")),
            "svg": None if out is not None else document,
        }, []

    emit(ctx, "cone-svg", inputs, output_format, compute)
