"""Renderers for table output and the ample-cone figure."""

from bn_walls.renderers.cone_svg import ConeFigure, render_cone_svg, write_cone_svg
from bn_walls.renderers.table import TableRenderer

__all__ = ["ConeFigure", "TableRenderer", "render_cone_svg", "write_cone_svg"]
