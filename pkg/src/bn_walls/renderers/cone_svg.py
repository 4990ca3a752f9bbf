"""
SVG figure of the ample cone of F_e with walls and polarizations.

The horizontal axis is the C0 coefficient and the vertical axis the F
coefficient. The cone is bounded by the rays F and C0 + eF; a wall ξ = (p, q)
is drawn as the ray spanned by (p, ep - q). All coordinates are written with a
fixed number of decimals and walls are drawn in canonical order, so equal
inputs give byte-identical documents.
"""

from fractions import Fraction
from pathlib import Path

import svgwrite

from bn_walls.constants import SVG_CANVAS, SVG_MARGIN, SVG_PRECISION
from bn_walls.core.picard import ample_boundary_rays, check_class, require_ample
from bn_walls.core.walls import enumerate_walls, wall_ray
from bn_walls.models.surface import DivisorClass, Surface
from bn_walls.utils.app_logger import get_logger
from bn_walls.utils.file_utils import write_text_atomic

logger = get_logger(__name__)


class ConeFigure:
    """
    Builds the ample-cone figure with svgwrite.

    Attributes:
        dwg: The SVG drawing
        layer_cone: Group holding the two boundary rays
        layer_walls: Group holding one ray per wall
        layer_marks: Group holding polarization marks and their labels
    """

    def __init__(
        self,
        surface: Surface,
        extent: Fraction,
        canvas: int = SVG_CANVAS,
        precision: int = SVG_PRECISION,
    ) -> None:
        self.surface = surface
        self.extent = extent
        self.canvas = canvas
        self.precision = precision
        self.dwg = svgwrite.Drawing(size=(f"{canvas}px", f"{canvas}px"), profile="full", debug=False)
        self.dwg.viewbox(0, 0, canvas, canvas)
        self.dwg.add(self.dwg.rect(insert=(0, 0), size=(canvas, canvas), fill="white"))
        self.layer_axes = self.dwg.add(self.dwg.g(id="layer-axes"))
        self.layer_cone = self.dwg.add(self.dwg.g(id="layer-cone"))
        self.layer_walls = self.dwg.add(self.dwg.g(id="layer-walls"))
        self.layer_marks = self.dwg.add(self.dwg.g(id="layer-marks"))

    def _fmt(self, value: Fraction) -> str:
        text = f"{float(value):.{self.precision}f}"
        # Normalize negative zero
        return text[1:] if text.startswith("-") and float(text) == 0 else text

    def _pixel(self, a: Fraction, b: Fraction) -> tuple[str, str]:
        span = self.canvas - 2 * SVG_MARGIN
        x = SVG_MARGIN + a / self.extent * span
        y = self.canvas - SVG_MARGIN - b / self.extent * span
        return self._fmt(x), self._fmt(y)

    def _ray_end(self, direction: DivisorClass) -> tuple[Fraction, Fraction]:
        u, v = direction.coords
        scale = self.extent / max(u, v)
        return u * scale, v * scale

    def draw_axes(self) -> None:
        origin = self._pixel(Fraction(0), Fraction(0))
        for end, label in (
            ((self.extent, Fraction(0)), "C0"),
            ((Fraction(0), self.extent), "F"),
        ):
            tip = self._pixel(*end)
            self.layer_axes.add(
                self.dwg.line(start=origin, end=tip, stroke="#999999", stroke_width=1)
            )
            self.layer_axes.add(
                self.dwg.text(label, insert=tip, fill="#555555", font_size="12px", font_family="sans-serif")
            )

    def draw_boundary(self) -> None:
        origin = self._pixel(Fraction(0), Fraction(0))
        for ray in ample_boundary_rays(self.surface):
            line = self.dwg.line(
                start=origin, end=self._pixel(*self._ray_end(ray)), stroke="black", stroke_width=2
            )
            line["class"] = "cone-boundary"
            line["data-direction"] = str(ray)
            self.layer_cone.add(line)

    def draw_wall(self, xi: DivisorClass) -> None:
        origin = self._pixel(Fraction(0), Fraction(0))
        tip = self._pixel(*self._ray_end(wall_ray(self.surface, xi)))
        line = self.dwg.line(start=origin, end=tip, stroke="#c0392b", stroke_width=1.5)
        line["class"] = "wall"
        line["data-xi"] = str(xi)
        self.layer_walls.add(line)
        self.layer_walls.add(
            self.dwg.text(f"ξ={xi}", insert=tip, fill="#c0392b", font_size="10px", font_family="sans-serif")
        )

    def draw_polarization(self, label: str, polarization: DivisorClass) -> None:
        a, b = polarization.coords
        center = self._pixel(Fraction(a), Fraction(b))
        mark = self.dwg.circle(center=center, r=4, fill="#2c3e50")
        mark["class"] = "polarization"
        mark["data-class"] = str(polarization)
        self.layer_marks.add(mark)
        x, y = center
        self.layer_marks.add(
            self.dwg.text(
                f"{label} {polarization}",
                insert=(self._fmt(Fraction(x) + 6), self._fmt(Fraction(y) - 6)),
                fill="#2c3e50",
                font_size="11px",
                font_family="sans-serif",
            )
        )

    def to_string(self) -> str:
        return str(self.dwg.tostring()) + "\n"


def figure_extent(polarizations: list[DivisorClass]) -> Fraction:
    """Side of the plotted square: 5/4 of the largest coordinate, at least 4."""
    largest = max((max(p.coords) for p in polarizations), default=0)
    return max(Fraction(4), Fraction(5 * largest, 4))


def render_cone_svg(
    s: Surface,
    c1: DivisorClass,
    c2: int,
    polarizations: list[tuple[str, DivisorClass]],
    canvas: int = SVG_CANVAS,
    precision: int = SVG_PRECISION,
) -> str:
    """SVG text of the cone with every wall of type (c1, c2) and labeled marks.

    Raises:
        InvalidInputError: On P^2, or when a polarization is not ample
    """
    ample_boundary_rays(s)
    check_class(s, c1)
    for _, polarization in polarizations:
        require_ample(s, polarization)
    walls = enumerate_walls(s, c1, c2)
    figure = ConeFigure(s, figure_extent([p for _, p in polarizations]), canvas, precision)
    figure.draw_axes()
    figure.draw_boundary()
    for wall in walls:
        figure.draw_wall(wall.xi)
    for label, polarization in polarizations:
        figure.draw_polarization(label, polarization)
    logger.debug(f"Cone figure: {len(walls)} walls, {len(polarizations)} polarizations")
    return figure.to_string()


def write_cone_svg(path: Path, document: str) -> None:
    write_text_atomic(path, document)
    logger.info(f"Wrote cone figure to {path}")
