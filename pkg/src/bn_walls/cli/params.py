"""Click parameter types and shared options."""

from collections.abc import Callable
from typing import Any, TypeVar

import click

from bn_walls.constants import OUTPUT_FORMATS
from bn_walls.exceptions import InvalidInputError
from bn_walls.models.cohomology import SectionOverride
from bn_walls.models.surface import DivisorClass, Surface

F = TypeVar("F", bound=Callable[..., Any])


class DivisorParam(click.ParamType):
    """A divisor class written as comma-separated integers, e.g. ``1,-2``."""

    name = "divisor"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> DivisorClass:
        if isinstance(value, DivisorClass):
            return value
        try:
            coords = tuple(int(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"'{value}' is not a comma-separated list of integers", param, ctx)
        if not 1 <= len(coords) <= 2:
            self.fail(f"'{value}' must have one or two coordinates", param, ctx)
        return DivisorClass(coords=coords)


class SurfaceParam(click.ParamType):
    """A surface label: ``f<e>`` or ``p2``."""

    name = "surface"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Surface:
        if isinstance(value, Surface):
            return value
        try:
            return Surface.parse(str(value))
        except InvalidInputError as e:
            self.fail(str(e), param, ctx)


class OverrideParam(click.ParamType):
    """A declared section count ``a,b=h`` for h0(I_Z(aC0 + bF))."""

    name = "override"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> SectionOverride:
        if isinstance(value, SectionOverride):
            return value
        twist, sep, count = str(value).partition("=")
        if not sep:
            self.fail(f"'{value}' must look like a,b=h", param, ctx)
        try:
            h0 = int(count)
        except ValueError:
            self.fail(f"'{count}' is not an integer", param, ctx)
        if h0 < 0:
            self.fail(f"Section count must be non-negative, got {h0}", param, ctx)
        return SectionOverride(twist=DIVISOR.convert(twist, param, ctx), h0=h0)


class GridPointParam(click.ParamType):
    """Four integers ``e,alpha,c2,n``."""

    name = "e,alpha,c2,n"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> tuple[int, int, int, int]:
        if isinstance(value, tuple):
            return value
        try:
            parts = tuple(int(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"'{value}' is not a comma-separated list of integers", param, ctx)
        if len(parts) != 4:
            self.fail(f"'{value}' must have exactly four entries", param, ctx)
        return parts  # type: ignore[return-value]


DIVISOR = DivisorParam()
SURFACE = SurfaceParam()
OVERRIDE = OverrideParam()
GRID_POINT = GridPointParam()


def surface_options(func: F) -> F:
    """Add --surface and --e to a command."""
    func = click.option(
        "--e", "e", type=click.IntRange(min=0), default=None, help="Hirzebruch invariant (F_e)"
    )(func)
    func = click.option(
        "--surface", "surface", type=SURFACE, default=None, help="Surface: f0, f1, ... or p2"
    )(func)
    return func


def format_option(func: F) -> F:
    """Add --format to a command; the default comes from the configuration."""
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help="Output format (default: json, or the configured default_format)",
    )(func)


def resolve_surface(surface: Surface | None, e: int | None) -> Surface:
    """Combine --surface and --e into one surface.

    Raises:
        click.UsageError: If neither is given or the two disagree
    """
    if surface is None and e is None:
        raise click.UsageError("Give the surface with --surface f<e>|p2 or --e N")
    if surface is None:
        assert e is not None
        return Surface.hirzebruch(e)
    if e is not None and (not surface.is_hirzebruch or surface.e != e):
        raise click.UsageError(f"--surface {surface.label} contradicts --e {e}")
    return surface
