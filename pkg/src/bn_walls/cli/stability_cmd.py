"""Stability oracle command."""

from typing import Any

import click

from bn_walls.cli.output import app_config, emit
from bn_walls.cli.params import DIVISOR, OVERRIDE, format_option, resolve_surface, surface_options
from bn_walls.core.stability import (
    quadric_chain_witness,
    quadric_family_model,
    quadric_polarization,
    stability_verdict,
)
from bn_walls.models.cohomology import SectionOverride, ZModel
from bn_walls.models.stability import ExtensionData
from bn_walls.models.surface import DivisorClass, Surface


@click.command(name="stability")
@surface_options
@click.option("--pol", "polarization", type=DIVISOR, default=None, help="Ample class L")
@click.option("--d", "sub", type=DIVISOR, default=None, help="Sub-line-bundle class D")
@click.option("--c1", type=DIVISOR, default=None, help="First Chern class of E")
@click.option("--length", type=click.IntRange(min=0), default=0, help="Length of Z")
@click.option(
    "--override",
    "overrides",
    type=OVERRIDE,
    multiple=True,
    help="Declared h0(I_Z(M)) as a,b=h (repeatable)",
)
@click.option("--quadric", type=int, default=None, help="Use the quadric family with this n")
@click.option("--special", type=int, default=None, help="With --quadric: the member E_i")
@click.option("--chain", is_flag=True, help="With --quadric: verdicts for all members")
@click.option("--inflation", type=click.IntRange(min=1), default=None, help="Search box factor")
@format_option
@click.pass_context
def stability_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    polarization: DivisorClass | None,
    sub: DivisorClass | None,
    c1: DivisorClass | None,
    length: int,
    overrides: tuple[SectionOverride, ...],
    quadric: int | None,
    special: int | None,
    chain: bool,
    inflation: int | None,
    output_format: str | None,
) -> None:
    """Decide slope stability of an extension 0 → O(D) → E → O(c1-D) ⊗ I_Z → 0."""
    factor = inflation or app_config(ctx).search_inflation
    if quadric is not None:
        if sub is not None or c1 is not None or overrides:
            raise click.UsageError("--quadric cannot be combined with --d, --c1 or --override")
        s = Surface.hirzebruch(0)
        n = quadric
        inputs: dict[str, Any] = {"quadric": n, "special": special, "inflation": factor}

        def compute_quadric() -> tuple[Any, list[str]]:
            if chain:
                return quadric_chain_witness(n, factor), []
            pol = polarization or quadric_polarization(n)
            return stability_verdict(s, pol, quadric_family_model(n, special), factor), []

        if polarization is not None:
            inputs["pol"] = polarization
        emit(ctx, "stability", inputs, output_format, compute_quadric)
        return

    if chain or special is not None:
        raise click.UsageError("--special and --chain need --quadric")
    if sub is None or c1 is None or polarization is None:
        raise click.UsageError("Give --d, --c1 and --pol, or use --quadric N")
    s = resolve_surface(surface, e)
    pol, d, first = polarization, sub, c1

    def compute() -> tuple[Any, list[str]]:
        ext = ExtensionData(sub=d, c1=first, z=ZModel(length=length, overrides=overrides))
        return stability_verdict(s, pol, ext, factor), []

    emit(
        ctx,
        "stability",
        {
            "surface": s.label,
            "pol": pol,
            "d": d,
            "c1": first,
            "length": length,
            "overrides": list(overrides),
            "inflation": factor,
        },
        output_format,
        compute,
    )
