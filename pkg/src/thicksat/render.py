"""SVG figures of drawings and extension arrangements.

Output depends only on the input, so equal drawings render to identical
bytes. The y axis points up as in the drawing's coordinates.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import svgwrite  # type: ignore[import-untyped]

from thicksat.config import palette_color
from thicksat.drawing import Coloring, Drawing
from thicksat.extension import Cell, ExtensionArrangement
from thicksat.geom import Point

CANVAS = 480
MARGIN = 24
VERTEX_RADIUS = 4
STROKE_WIDTH = 2
CELL_FILL = "#f2e6b3"


@dataclass(frozen=True)
class _Frame:
    """Affine map from drawing coordinates onto the canvas."""

    min_x: Fraction
    max_y: Fraction
    scale: Fraction

    @classmethod
    def fit(cls, points: Sequence[Point]) -> "_Frame":
        xs = [p.x for p in points] or [Fraction(0)]
        ys = [p.y for p in points] or [Fraction(0)]
        span = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
        return cls(min(xs), max(ys), Fraction(CANVAS - 2 * MARGIN) / span)

    def __call__(self, p: Point) -> tuple[float, float]:
        x = MARGIN + (p.x - self.min_x) * self.scale
        y = MARGIN + (self.max_y - p.y) * self.scale
        return round(float(x), 3), round(float(y), 3)


def _canvas() -> svgwrite.Drawing:
    dwg = svgwrite.Drawing(size=(CANVAS, CANVAS), profile="full", debug=False)
    dwg.attribs["viewBox"] = f"0 0 {CANVAS} {CANVAS}"
    return dwg


def _add_edges(
    dwg: svgwrite.Drawing, drawing: Drawing, coloring: Coloring | None, frame: _Frame
) -> None:
    if coloring is None:
        classes = {0: drawing.sorted_edges()}
    else:
        classes = {c: coloring.edges_of(c) for c in range(1, drawing.k + 1)}
    for color, edges in classes.items():
        stroke = palette_color(max(color - 1, 0)) if coloring is not None else "#333333"
        group = dwg.g(
            id=f"color-{color}" if coloring is not None else "edges",
            stroke=stroke,
            stroke_width=STROKE_WIDTH,
            fill="none",
        )
        for e in edges:
            segment = drawing.segment(e)
            group.add(dwg.line(start=frame(segment.a), end=frame(segment.b)))
        dwg.add(group)


def _add_vertices(dwg: svgwrite.Drawing, drawing: Drawing, frame: _Frame) -> None:
    group = dwg.g(id="vertices", fill="#111111", stroke="none")
    for p in drawing.vertices:
        group.add(dwg.circle(center=frame(p), r=VERTEX_RADIUS))
    dwg.add(group)


def render_drawing(drawing: Drawing, coloring: Coloring | None = None) -> str:
    """Render a drawing with one group per color class."""
    dwg = _canvas()
    frame = _Frame.fit(drawing.vertices)
    _add_edges(dwg, drawing, coloring, frame)
    _add_vertices(dwg, drawing, frame)
    return str(dwg.tostring())


def render_arrangement(arr: ExtensionArrangement, cell_list: Sequence[Cell]) -> str:
    """Render shaded cells annotated with their size, dashed extensions and the drawing."""
    dwg = _canvas()
    frame = _Frame.fit(arr.base.vertices)

    cell_group = dwg.g(id="cells", fill=CELL_FILL, stroke="none", opacity=0.6)
    label_group = dwg.g(id="cell-sizes", font_size=12, text_anchor="middle", fill="#5a4a00")
    for cell in cell_list:
        cell_group.add(dwg.polygon(points=[frame(p) for p in cell.boundary]))
        m = len(cell.boundary)
        center = Point(
            sum((p.x for p in cell.boundary), Fraction(0)) / m,
            sum((p.y for p in cell.boundary), Fraction(0)) / m,
        )
        label_group.add(dwg.text(str(cell.size), insert=frame(center)))
    dwg.add(cell_group)

    hull_group = dwg.g(id="outer-cycle", stroke="#777777", stroke_width=1, fill="none")
    for s in arr.outer_cycle_segments:
        hull_group.add(dwg.line(start=frame(s.a), end=frame(s.b)))
    dwg.add(hull_group)

    ext_group = dwg.g(
        id="extensions",
        stroke=palette_color(1),
        stroke_width=1,
        stroke_dasharray="6,4",
        fill="none",
    )
    for s in arr.extensions:
        ext_group.add(dwg.line(start=frame(s.a), end=frame(s.b)))
    dwg.add(ext_group)

    _add_edges(dwg, arr.base, arr.coloring, frame)
    _add_vertices(dwg, arr.base, frame)
    dwg.add(label_group)
    return str(dwg.tostring())


def write_svg(path: str | Path, svg: str) -> Path:
    target = Path(path)
    target.write_text(svg, encoding="utf-8")
    return target
