"""Drawing documents: the JSON file format of the command line and MCP tools.

A document looks like::

    {"version": "1", "k": 2,
     "vertices": [[0, 0], ["7/2", 1], [3, "-1/3"]],
     "edges": [[0, 1, 1], [1, 2, 2]]}

Coordinates are integers or exact ``"p/q"`` strings; edges carry either no
color at all or a color each.
"""

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from thicksat.config import DOCUMENT_VERSION
from thicksat.drawing import Coloring, Drawing, Edge, normalize_edge
from thicksat.errors import DocumentError, ThicksatError
from thicksat.geom import Point

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def parse_coordinate(value: Any, field: str) -> Fraction:
    """Parse an integer or ``"p/q"`` string into an exact fraction.

    Raises:
        DocumentError: On floats, booleans, malformed strings or q = 0
    """
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(
            f"Coordinate must be an integer or a 'p/q' string, got {value!r}", field
        )
    if isinstance(value, int):
        return Fraction(value)
    match = _RATIONAL.match(value)
    if not match:
        raise DocumentError(f"Malformed rational coordinate '{value}'", field)
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise DocumentError(f"Zero denominator in coordinate '{value}'", field)
    return Fraction(int(numerator), int(denominator or 1))


def format_coordinate(value: Fraction) -> int | str:
    """Integers stay integers; everything else becomes ``"p/q"``."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def _integer(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"Expected an integer, got {value!r}", field)
    return value


def from_dict(data: Any) -> tuple[Drawing, Coloring | None]:
    """Build a drawing and, if every edge is colored, its coloring.

    Raises:
        DocumentError: With the path of the offending field
    """
    if not isinstance(data, dict):
        raise DocumentError("Document must be a JSON object", "$")
    version = data.get("version")
    if version != DOCUMENT_VERSION:
        raise DocumentError(
            f"Unsupported document version {version!r}, expected '{DOCUMENT_VERSION}'",
            "version",
        )
    k = _integer(data.get("k"), "k")
    if k < 1:
        raise DocumentError(f"k must be positive, got {k}", "k")

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list):
        raise DocumentError("'vertices' must be a list", "vertices")
    vertices: list[Point] = []
    for i, raw in enumerate(raw_vertices):
        if not isinstance(raw, list) or len(raw) != 2:
            raise DocumentError("Vertex must be a pair [x, y]", f"vertices[{i}]")
        vertices.append(
            Point(
                parse_coordinate(raw[0], f"vertices[{i}][0]"),
                parse_coordinate(raw[1], f"vertices[{i}][1]"),
            )
        )

    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise DocumentError("'edges' must be a list", "edges")
    edges: list[Edge] = []
    colors: dict[Edge, int] = {}
    colored = uncolored = 0
    for i, raw in enumerate(raw_edges):
        field = f"edges[{i}]"
        if not isinstance(raw, list) or len(raw) not in (2, 3):
            raise DocumentError("Edge must be [u, v] or [u, v, color]", field)
        u = _integer(raw[0], f"{field}[0]")
        v = _integer(raw[1], f"{field}[1]")
        if u == v or not (0 <= u < len(vertices) and 0 <= v < len(vertices)):
            raise DocumentError(
                f"Edge ({u}, {v}) needs two distinct vertices in 0..{len(vertices) - 1}", field
            )
        edge = normalize_edge(u, v)
        edges.append(edge)
        if len(raw) == 3:
            color = _integer(raw[2], f"{field}[2]")
            if edge in colors and colors[edge] != color:
                raise DocumentError(f"Edge {edge} listed with two colors", field)
            colors[edge] = color
            colored += 1
        else:
            uncolored += 1
    if colored and uncolored:
        raise DocumentError(
            f"Partial coloring: {colored} edges colored, {uncolored} not", "edges"
        )

    try:
        drawing = Drawing.create(vertices, edges, k)
    except ThicksatError as e:
        raise DocumentError(e.message, "vertices", e.details) from e
    return drawing, (Coloring(colors) if colored else None)


def parse_document(text: str) -> tuple[Drawing, Coloring | None]:
    """Parse document text.

    Raises:
        DocumentError: On JSON syntax errors (with line and column) or
            invalid content (with the field path)
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(
            f"Invalid JSON: {e.msg}", None, {"line": e.lineno, "column": e.colno}
        ) from e
    return from_dict(data)


def load_document(path: str | Path) -> tuple[Drawing, Coloring | None]:
    """Read and parse a UTF-8 document file.

    Raises:
        DocumentError: If the file is unreadable or does not parse
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"Cannot read '{path}': {e.strerror}", None, {"path": str(path)}) from e
    return parse_document(text)


def to_dict(drawing: Drawing, coloring: Coloring | None = None) -> dict[str, Any]:
    """Serialize a drawing, with colors when a coloring is given."""
    edges: list[list[int]] = []
    for u, v in drawing.sorted_edges():
        edges.append([u, v, coloring[(u, v)]] if coloring is not None else [u, v])
    return {
        "version": DOCUMENT_VERSION,
        "k": drawing.k,
        "vertices": [[format_coordinate(p.x), format_coordinate(p.y)] for p in drawing.vertices],
        "edges": edges,
    }


def dumps_document(drawing: Drawing, coloring: Coloring | None = None) -> str:
    return json.dumps(to_dict(drawing, coloring), indent=2) + "\n"


def save_document(path: str | Path, drawing: Drawing, coloring: Coloring | None = None) -> Path:
    """Write a document as UTF-8 and return its path."""
    target = Path(path)
    target.write_text(dumps_document(drawing, coloring), encoding="utf-8")
    return target
