"""Drawing data model.

A ``Drawing`` is a point set plus a simple straight-line edge set; a
``Coloring`` assigns each edge one of k colors. Colorings are kept apart from
drawings so that one drawing can carry many candidate colorings.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any

import networkx as nx

from thicksat.errors import (
    ERROR_INVALID_COLORING,
    ERROR_INVALID_DRAWING,
    ERROR_INVALID_PARAMETERS,
    ThicksatError,
)
from thicksat.geom import (
    Point,
    Segment,
    collinear_triples,
    convex_hull,
    general_position,
    segments_cross,
)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the sorted index pair for an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Drawing:
    """A straight-line drawing with thickness budget k.

    Construction rejects duplicate points, self-loops and out-of-range
    endpoints. General position is reported by ``validate`` instead.
    """

    vertices: tuple[Point, ...]
    edges: frozenset[Edge]
    k: int = 2

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ThicksatError(
                ERROR_INVALID_DRAWING, f"k must be positive, got {self.k}", {"k": self.k}
            )
        if len(set(self.vertices)) != len(self.vertices):
            seen: dict[Point, int] = {}
            for i, p in enumerate(self.vertices):
                if p in seen:
                    raise ThicksatError(
                        ERROR_INVALID_DRAWING,
                        f"Vertices {seen[p]} and {i} coincide",
                        {"vertices": [seen[p], i]},
                    )
                seen[p] = i
        n = len(self.vertices)
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ThicksatError(
                    ERROR_INVALID_DRAWING,
                    f"Edge ({u}, {v}) is not a sorted pair of distinct vertices in range",
                    {"edge": [u, v], "vertex_count": n},
                )

    @classmethod
    def create(
        cls,
        vertices: Sequence[Point],
        edges: Iterable[tuple[int, int]] = (),
        k: int = 2,
    ) -> "Drawing":
        """Build a drawing, normalizing edge orientation.

        Raises:
            ThicksatError: On loops, duplicates or out-of-range endpoints
        """
        normalized: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ThicksatError(
                    ERROR_INVALID_DRAWING, f"Self-loop at vertex {u}", {"edge": [u, v]}
                )
            normalized.add(normalize_edge(u, v))
        return cls(tuple(vertices), frozenset(normalized), k)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def segment(self, edge: Edge) -> Segment:
        """Return the straight-line segment drawn for a vertex pair."""
        return Segment(self.vertices[edge[0]], self.vertices[edge[1]])

    @cached_property
    def segments(self) -> dict[Edge, Segment]:
        return {e: self.segment(e) for e in self.edges}

    def crosses(self, e: Edge, f: Edge) -> bool:
        """Return True iff the segments of two vertex pairs cross."""
        return segments_cross(self.segment(e), self.segment(f))

    def non_edges(self) -> list[Edge]:
        """All vertex pairs not in the drawing, lexicographically."""
        return [e for e in combinations(range(self.n), 2) if e not in self.edges]

    def with_edge(self, edge: tuple[int, int]) -> "Drawing":
        return Drawing(self.vertices, self.edges | {normalize_edge(*edge)}, self.k)

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Drawing":
        return Drawing(
            self.vertices, self.edges | {normalize_edge(u, v) for u, v in edges}, self.k
        )

    def with_k(self, k: int) -> "Drawing":
        return Drawing(self.vertices, self.edges, k)


@dataclass(frozen=True)
class Coloring:
    """An edge coloring with colors 1..k."""

    color_of: Mapping[Edge, int] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[tuple[int, int], int]]) -> "Coloring":
        return cls({normalize_edge(*e): c for e, c in pairs})

    @classmethod
    def monochrome(cls, drawing: Drawing, color: int = 1) -> "Coloring":
        return cls(dict.fromkeys(drawing.edges, color))

    def __getitem__(self, edge: Edge) -> int:
        return self.color_of[edge]

    def __contains__(self, edge: object) -> bool:
        return edge in self.color_of

    def __len__(self) -> int:
        return len(self.color_of)

    def with_color(self, edge: tuple[int, int], color: int) -> "Coloring":
        updated = dict(self.color_of)
        updated[normalize_edge(*edge)] = color
        return Coloring(updated)

    def color_classes(self) -> dict[int, list[Edge]]:
        """Map each used color to its sorted edge list."""
        classes: dict[int, list[Edge]] = {}
        for e in sorted(self.color_of):
            classes.setdefault(self.color_of[e], []).append(e)
        return classes

    def edges_of(self, color: int) -> list[Edge]:
        return sorted(e for e, c in self.color_of.items() if c == color)


@dataclass(frozen=True)
class Defect:
    """One reason a drawing/coloring pair is not a valid thickness-k drawing."""

    kind: str
    message: str
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "message": self.message, "details": self.details}


# Defect kinds
DEFECT_MONOCHROMATIC_CROSSING = "monochromatic_crossing"
DEFECT_COLOR_OUT_OF_RANGE = "color_out_of_range"
DEFECT_UNCOLORED_EDGE = "uncolored_edge"
DEFECT_UNKNOWN_EDGE = "unknown_edge"
DEFECT_GENERAL_POSITION = "general_position"
DEFECT_EDGE_BOUND = "convex_edge_bound"


@dataclass(frozen=True)
class ValidationReport:
    """All defects found by ``validate``; empty means valid."""

    defects: tuple[Defect, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.defects

    def of_kind(self, kind: str) -> list[Defect]:
        return [d for d in self.defects if d.kind == kind]

    def to_dict(self) -> dict[str, Any]:
        return {"valid": self.ok, "defects": [d.to_dict() for d in self.defects]}


@dataclass(frozen=True)
class ConflictGraph:
    """Graph on the edges of a drawing; adjacency is geometric crossing."""

    graph: nx.Graph

    @property
    def nodes(self) -> list[Edge]:
        return sorted(self.graph.nodes)

    @property
    def adjacency(self) -> frozenset[frozenset[Edge]]:
        return frozenset(frozenset(pair) for pair in self.graph.edges)

    def adjacent(self, e: Edge, f: Edge) -> bool:
        return bool(self.graph.has_edge(e, f))


@dataclass(frozen=True)
class OuterCycle:
    """Hull vertices in counterclockwise order and the hull edges present."""

    order: tuple[int, ...]
    present_edges: frozenset[Edge]

    @property
    def hull_edges(self) -> list[Edge]:
        """All consecutive hull pairs, present or not."""
        m = len(self.order)
        return [normalize_edge(self.order[i], self.order[(i + 1) % m]) for i in range(m)]

    def __len__(self) -> int:
        return len(self.order)


def validate(drawing: Drawing, coloring: Coloring) -> ValidationReport:
    """Check that a coloring certifies thickness k for a drawing.

    Args:
        drawing: The drawing to check
        coloring: Candidate coloring, expected total on the edge set

    Returns:
        Report listing monochromatic crossings, colors outside 1..k,
        uncolored or unknown edges, collinear vertex triples, and, for convex
        drawings, an edge count above n + k(n - 3)
    """
    defects: list[Defect] = []

    for i, j, k in collinear_triples(drawing.vertices):
        defects.append(
            Defect(
                DEFECT_GENERAL_POSITION,
                f"Vertices {i}, {j}, {k} are collinear",
                {"vertices": [i, j, k]},
            )
        )

    for e in drawing.sorted_edges():
        if e not in coloring:
            defects.append(
                Defect(DEFECT_UNCOLORED_EDGE, f"Edge {e} has no color", {"edge": list(e)})
            )
        elif not 1 <= coloring[e] <= drawing.k:
            defects.append(
                Defect(
                    DEFECT_COLOR_OUT_OF_RANGE,
                    f"Edge {e} has color {coloring[e]} outside 1..{drawing.k}",
                    {"edge": list(e), "color": coloring[e], "k": drawing.k},
                )
            )
    for e in sorted(coloring.color_of):
        if e not in drawing.edges:
            defects.append(
                Defect(
                    DEFECT_UNKNOWN_EDGE,
                    f"Coloring assigns a color to non-edge {e}",
                    {"edge": list(e)},
                )
            )

    for color, members in coloring.color_classes().items():
        present = [e for e in members if e in drawing.edges]
        for e, f in combinations(present, 2):
            if drawing.crosses(e, f):
                defects.append(
                    Defect(
                        DEFECT_MONOCHROMATIC_CROSSING,
                        f"Edges {e} and {f} share color {color} and cross",
                        {"edges": [list(e), list(f)], "color": color},
                    )
                )

    if drawing.n >= 3 and general_position(drawing.vertices) and is_convex(drawing):
        limit = drawing.n + drawing.k * (drawing.n - 3)
        if len(drawing.edges) > limit:
            defects.append(
                Defect(
                    DEFECT_EDGE_BOUND,
                    f"Convex drawing has {len(drawing.edges)} edges, above n + k(n - 3) = {limit}",
                    {"edges": len(drawing.edges), "limit": limit},
                )
            )

    return ValidationReport(tuple(defects))


def require_valid(drawing: Drawing, coloring: Coloring) -> None:
    """Raise unless the coloring certifies the drawing.

    Raises:
        ThicksatError: With the report's defects in ``details``
    """
    report = validate(drawing, coloring)
    if not report.ok:
        raise ThicksatError(
            ERROR_INVALID_COLORING,
            f"Coloring does not certify thickness {drawing.k}: {report.defects[0].message}",
            report.to_dict(),
        )


def conflict_graph(drawing: Drawing) -> ConflictGraph:
    """Return the graph whose nodes are edges and whose adjacency is crossing."""
    graph = nx.Graph()
    edges = drawing.sorted_edges()
    graph.add_nodes_from(edges)
    for e, f in combinations(edges, 2):
        if drawing.crosses(e, f):
            graph.add_edge(e, f)
    return ConflictGraph(graph)


def outer_cycle(drawing: Drawing) -> OuterCycle:
    """Return the hull cycle of a drawing and which of its edges are drawn.

    Raises:
        ThicksatError: If the drawing has fewer than three vertices
    """
    if drawing.n < 3:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"outer cycle needs at least 3 vertices, got {drawing.n}",
            {"vertex_count": drawing.n},
        )
    order = tuple(convex_hull(drawing.vertices))
    m = len(order)
    present = frozenset(
        e
        for e in (normalize_edge(order[i], order[(i + 1) % m]) for i in range(m))
        if e in drawing.edges
    )
    return OuterCycle(order, present)


def is_convex(drawing: Drawing) -> bool:
    """Return True iff every vertex lies on the convex hull."""
    if drawing.n < 3:
        return True
    return len(convex_hull(drawing.vertices)) == drawing.n
