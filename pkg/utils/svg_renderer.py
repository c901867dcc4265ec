"""
SVG rendering of planar compressed quadtrees using drawsvg
"""
from pathlib import Path
from typing import Tuple, Union

import drawsvg as draw
from loguru import logger

from geometry import CanonicalCell, UnsupportedDimensionError, child_cell
from quadtree import CompressedQuadtree

CANVAS = 512.0
MARGIN = 8.0

BACKGROUND = "#ffffff"
CELL_STROKE = "#34495e"
ANNULUS_FILL = "#f5b041"
POINT_FILL = "#c0392b"


class TreeRenderer:
    """Draws cell boundaries, stored points and shaded compressed-edge annuli"""

    def __init__(self, T: CompressedQuadtree, canvas: float = CANVAS):
        if T.cfg.d != 2:
            raise UnsupportedDimensionError(f"rendering needs d = 2, tree has d = {T.cfg.d}")
        self.T = T
        self.canvas = canvas
        self.scale = canvas / T.cfg.side

    def to_canvas(self, x: float, y: float) -> Tuple[float, float]:
        # origin at the bottom-left
        return MARGIN + x * self.scale, MARGIN + self.canvas - y * self.scale

    def _square(self, path: draw.Path, c: CanonicalCell) -> None:
        (x0, y0), (x1, y1) = c.lower(), c.upper()
        path.M(*self.to_canvas(x0, y0))
        path.L(*self.to_canvas(x1, y0))
        path.L(*self.to_canvas(x1, y1))
        path.L(*self.to_canvas(x0, y1))
        path.Z()

    def render(self) -> draw.Drawing:
        size = self.canvas + 2 * MARGIN
        d = draw.Drawing(size, size)
        d.append(draw.Rectangle(0, 0, size, size, fill=BACKGROUND))

        for node in self.T.nodes():
            for q, child in sorted(node.children.items()):
                quadrant = child_cell(node.cell, q)
                if child.cell == quadrant:
                    continue
                annulus = draw.Path(fill=ANNULUS_FILL, fill_opacity=0.5, fill_rule="evenodd", stroke="none")
                self._square(annulus, quadrant)
                self._square(annulus, child.cell)
                d.append(annulus)

        for node in self.T.nodes():
            outline = draw.Path(fill="none", stroke=CELL_STROKE, stroke_width=1)
            self._square(outline, node.cell)
            d.append(outline)

        radius = max(2.0, self.canvas / 256)
        for node in self.T.nodes():
            p = node.stored_point
            if p is not None:
                x, y = p.coords
                d.append(draw.Circle(*self.to_canvas(x + 0.5, y + 0.5), radius, fill=POINT_FILL))
        return d


def render_svg(T: CompressedQuadtree, canvas: float = CANVAS) -> str:
    return TreeRenderer(T, canvas).render().as_svg()


def write_svg(path: Union[str, Path], T: CompressedQuadtree, canvas: float = CANVAS) -> Path:
    path = Path(path)
    path.write_text(render_svg(T, canvas), encoding="utf-8")
    logger.info(f"Rendered {T.node_count} node(s) to {path}")
    return path
