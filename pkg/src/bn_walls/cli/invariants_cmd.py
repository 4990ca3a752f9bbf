"""Commands for Euler characteristics and Brill-Noether numbers."""

from typing import Any

import click

from bn_walls.cli.output import emit
from bn_walls.cli.params import DIVISOR, format_option, resolve_surface, surface_options
from bn_walls.core.invariants import (
    bn_number,
    check_bn_defined,
    chi_sheaf,
    classical_bn_number,
    gh_codim_bounds,
    instanton_report,
    moduli_dim,
    quadric_strata,
)
from bn_walls.models.chern import ChernData
from bn_walls.models.surface import DivisorClass, Surface


def _inputs(surface: Surface, **values: Any) -> dict[str, Any]:
    return {"surface": surface.label, **values}


@click.command(name="chi")
@surface_options
@click.option("--rank", type=int, default=2, show_default=True, help="Rank r")
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class, e.g. 1,0")
@click.option("--c2", type=int, required=True, help="Second Chern class")
@format_option
@click.pass_context
def chi_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    rank: int,
    c1: DivisorClass,
    c2: int,
    output_format: str | None,
) -> None:
    """Euler characteristic χ(r; c1, c2)."""
    s = resolve_surface(surface, e)
    emit(
        ctx,
        "chi",
        _inputs(s, rank=rank, c1=c1, c2=c2),
        output_format,
        lambda: (chi_sheaf(s, ChernData(rank=rank, c1=c1, c2=c2)), []),
    )


@click.command(name="moduli-dim")
@surface_options
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class")
@click.option("--c2", type=int, required=True, help="Second Chern class")
@format_option
@click.pass_context
def moduli_dim_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    c1: DivisorClass,
    c2: int,
    output_format: str | None,
) -> None:
    """Dimension 4c2 - c1² - 3 of the rank-2 moduli space."""
    s = resolve_surface(surface, e)
    emit(
        ctx,
        "moduli-dim",
        _inputs(s, c1=c1, c2=c2),
        output_format,
        lambda: (moduli_dim(s, ChernData(rank=2, c1=c1, c2=c2)), []),
    )


@click.command(name="bn")
@surface_options
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class")
@click.option("--c2", type=int, required=True, help="Second Chern class")
@click.option("--k", "k", type=int, default=1, show_default=True, help="Number of sections")
@format_option
@click.pass_context
def bn_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    c1: DivisorClass,
    c2: int,
    k: int,
    output_format: str | None,
) -> None:
    """Brill-Noether number ρ^k = dim M - k(k - χ)."""
    s = resolve_surface(surface, e)
    emit(
        ctx,
        "bn",
        _inputs(s, c1=c1, c2=c2, k=k),
        output_format,
        lambda: (bn_number(s, ChernData(rank=2, c1=c1, c2=c2), k), []),
    )


@click.command(name="bn-defined")
@surface_options
@click.option("--pol", "polarization", type=DIVISOR, required=True, help="Ample class H")
@click.option("--rank", type=int, default=2, show_default=True, help="Rank r")
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class")
@format_option
@click.pass_context
def bn_defined_command(
    ctx: click.Context,
    surface: Surface | None,
    e: int | None,
    polarization: DivisorClass,
    rank: int,
    c1: DivisorClass,
    output_format: str | None,
) -> None:
    """Check c1·H >= r(K·H)."""
    s = resolve_surface(surface, e)

    def compute() -> tuple[Any, list[str]]:
        check = check_bn_defined(s, polarization, rank, c1)
        return check, list(check.warnings)

    emit(ctx, "bn-defined", _inputs(s, pol=polarization, rank=rank, c1=c1), output_format, compute)


@click.command(name="gh-bounds")
@click.option("--rank", type=int, default=2, show_default=True, help="Rank r")
@click.option("--c1", type=DIVISOR, required=True, help="First Chern class (multiple of H)")
@click.option("--c2", type=int, required=True, help="Second Chern class")
@format_option
@click.pass_context
def gh_bounds_command(
    ctx: click.Context, rank: int, c1: DivisorClass, c2: int, output_format: str | None
) -> None:
    """Codimension bounds of W^{χ⁺+1} on P^2."""
    emit(
        ctx,
        "gh-bounds",
        {"surface": "P2", "rank": rank, "c1": c1, "c2": c2},
        output_format,
        lambda: (gh_codim_bounds(ChernData(rank=rank, c1=c1, c2=c2)), []),
    )


@click.command(name="quadric")
@click.option("--n", "n", type=int, required=True, help="Family parameter n >= 2")
@format_option
@click.pass_context
def quadric_command(ctx: click.Context, n: int, output_format: str | None) -> None:
    """Stratification W^1 ⊃ ... ⊃ W^n for (2; (2n-1)l_2, 2n) on P^1 x P^1."""
    emit(
        ctx,
        "quadric",
        {"n": n},
        output_format,
        lambda: ({"n": n, "strata": quadric_strata(n)}, []),
    )


@click.command(name="instanton")
@click.option("--n", "n", type=int, required=True, help="Second Chern class n >= 1")
@format_option
@click.pass_context
def instanton_command(ctx: click.Context, n: int, output_format: str | None) -> None:
    """Brill-Noether table of the 't Hooft component MI_0(n) on P^3."""
    emit(ctx, "instanton", {"n": n}, output_format, lambda: (instanton_report(n), []))


@click.command(name="classical-bn")
@click.option("--g", "g", type=int, required=True, help="Genus")
@click.option("--r", "r", type=int, required=True, help="Projective dimension of the series")
@click.option("--d", "d", type=int, required=True, help="Degree")
@format_option
@click.pass_context
def classical_bn_command(
    ctx: click.Context, g: int, r: int, d: int, output_format: str | None
) -> None:
    """Classical number g - (r+1)(g - d + r) for curves."""
    emit(
        ctx,
        "classical-bn",
        {"g": g, "r": r, "d": d},
        output_format,
        lambda: (classical_bn_number(g, r, d), []),
    )
