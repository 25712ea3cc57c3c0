"""Edge extensions and the cell decomposition of two-colored drawings.

Red inner edges are extended one after the other along their supporting
lines until they meet a red edge, the outer cycle or an earlier extension.
Together with the outer cycle the extensions split the hull into convex
cells; triangulating every cell in red, after the blue edges have been
completed to a triangulation, yields a saturated drawing with at least
3n - 6 edges.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Any

import networkx as nx

from thicksat.drawing import (
    Coloring,
    Drawing,
    Edge,
    is_convex,
    normalize_edge,
    require_valid,
    validate,
)
from thicksat.errors import (
    ERROR_GENERAL_POSITION,
    ERROR_INVALID_COLORING,
    ERROR_INVALID_PARAMETERS,
    ThicksatError,
)
from thicksat.geom import (
    Point,
    Segment,
    convex_hull,
    cross,
    general_position,
    in_convex_position,
    line_intersection,
    point_in_open_segment,
    segments_cross,
    signed_area2,
)
from thicksat.saturation import (
    RED,
    SaturationMode,
    SearchBudget,
    complete_blue_triangulation,
    greedy_saturate,
    k_colorable,
)

logger = logging.getLogger(__name__)


def _hull_edges(order: Sequence[int]) -> set[Edge]:
    return {normalize_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order))}


def red_inner_edges(drawing: Drawing, coloring: Coloring) -> list[Edge]:
    """Red edges that are not edges of the outer cycle, sorted."""
    hull = _hull_edges(convex_hull(drawing.vertices))
    return [e for e in drawing.sorted_edges() if coloring[e] == RED and e not in hull]


@dataclass(frozen=True)
class ExtensionArrangement:
    """The outer cycle together with the extensions of all red inner edges.

    ``extensions[i]`` contains ``red_order[i]`` and lies on its line. The
    extension starts beyond the lower-numbered endpoint of the edge.
    """

    base: Drawing
    coloring: Coloring
    red_order: tuple[Edge, ...]
    extensions: tuple[Segment, ...]
    hull: tuple[int, ...]

    @property
    def outer_cycle_segments(self) -> list[Segment]:
        points = self.base.vertices
        m = len(self.hull)
        return [Segment(points[self.hull[i]], points[self.hull[(i + 1) % m]]) for i in range(m)]

    @property
    def red_edge_count(self) -> int:
        return len(self.red_order)

    def red_degree(self) -> dict[int, int]:
        """Number of red inner edges at each vertex that has one."""
        degree: dict[int, int] = {}
        for u, v in self.red_order:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        return degree

    @cached_property
    def subdivision(self) -> "_Subdivision":
        return _subdivide(self)


def _exit_parameter(origin: Point, direction: Point, hull: Sequence[Point]) -> Fraction:
    """Largest t with origin + t * direction still inside the hull."""
    limit: Fraction | None = None
    for i, a in enumerate(hull):
        b = hull[(i + 1) % len(hull)]
        c0 = cross(a, b, origin)
        c1 = (b.x - a.x) * direction.y - (b.y - a.y) * direction.x
        if c1 < 0:
            bound = c0 / -c1
            if limit is None or bound < limit:
                limit = bound
    assert limit is not None, "ray never leaves a bounded hull"
    return max(limit, Fraction(0))


def _ray_limit(
    origin: Point,
    direction: Point,
    hull: Sequence[Point],
    red: Sequence[Segment],
    earlier: Sequence[Segment],
) -> Fraction:
    limit = _exit_parameter(origin, direction, hull)
    for segment, is_extension in [(s, False) for s in red] + [(s, True) for s in earlier]:
        hit = line_intersection(origin, direction, segment)
        if hit is None:
            continue
        t, u = hit
        if t < 0 or t >= limit:
            continue
        # an extension passing exactly through the touch point of another ends there
        if 0 < u < 1 or (is_extension and t > 0 and 0 <= u <= 1):
            limit = t
    return limit


def extend_edges(
    drawing: Drawing,
    coloring: Coloring,
    red_order: Sequence[tuple[int, int]] | None = None,
) -> ExtensionArrangement:
    """Extend every red inner edge as far as possible, in order.

    Args:
        drawing: A drawing with k = 2 in general position
        coloring: Its blue/red coloring
        red_order: Order in which red inner edges are extended; sorted by
            default

    Returns:
        The arrangement of extensions

    Raises:
        ThicksatError: If k != 2, the points are not in general position,
            the coloring is invalid, or red_order is not a permutation of the
            red inner edges
    """
    if drawing.k != 2:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Edge extensions need k = 2, got k = {drawing.k}",
            {"k": drawing.k},
        )
    if not general_position(drawing.vertices):
        raise ThicksatError(
            ERROR_GENERAL_POSITION, "Edge extensions need points in general position", {}
        )
    require_valid(drawing, coloring)

    red = red_inner_edges(drawing, coloring)
    if red_order is None:
        order = red
    else:
        order = [normalize_edge(u, v) for u, v in red_order]
        if sorted(order) != red:
            raise ThicksatError(
                ERROR_INVALID_PARAMETERS,
                "red_order must list every red inner edge exactly once",
                {"expected": [list(e) for e in red], "provided": [list(e) for e in order]},
            )

    hull_order = convex_hull(drawing.vertices)
    hull_points = [drawing.vertices[i] for i in hull_order]
    extensions: list[Segment] = []
    for edge in order:
        p, q = drawing.vertices[edge[0]], drawing.vertices[edge[1]]
        others = [drawing.segment(f) for f in order if f != edge]
        backward = p - q
        forward = q - p
        t_back = _ray_limit(p, backward, hull_points, others, extensions)
        t_fwd = _ray_limit(q, forward, hull_points, others, extensions)
        extension = Segment(p + backward.scaled(t_back), q + forward.scaled(t_fwd))
        logger.debug("extension of %s: backward t=%s, forward t=%s", edge, t_back, t_fwd)
        extensions.append(extension)

    return ExtensionArrangement(
        drawing, coloring, tuple(order), tuple(extensions), tuple(hull_order)
    )


def _direction_half(d: Point) -> int:
    return 0 if d.y > 0 or (d.y == 0 and d.x > 0) else 1


def _compare_directions(d1: Point, d2: Point) -> int:
    h1, h2 = _direction_half(d1), _direction_half(d2)
    if h1 != h2:
        return h1 - h2
    turn = d1.x * d2.y - d1.y * d2.x
    return -1 if turn > 0 else (1 if turn < 0 else 0)


def _rotate_to_min(cycle: Sequence[Point]) -> tuple[Point, ...]:
    start = cycle.index(min(cycle))
    return tuple(cycle[start:]) + tuple(cycle[:start])


@dataclass(frozen=True)
class _Subdivision:
    """Plane graph of the outer cycle and extensions split at every touch point."""

    graph: nx.Graph
    faces: tuple[tuple[Point, ...], ...]
    vertex_at: dict[Point, int]

    @property
    def inner_faces(self) -> list[tuple[Point, ...]]:
        return [f for f in self.faces if signed_area2(f) > 0]


def _subdivide(arr: ExtensionArrangement) -> _Subdivision:
    segments = arr.outer_cycle_segments + list(arr.extensions)
    vertex_at = {p: i for i, p in enumerate(arr.base.vertices)}

    nodes: set[Point] = set()
    for s in segments:
        nodes.update((s.a, s.b))
    for p in arr.base.vertices:
        if any(point_in_open_segment(p, s) for s in segments):
            nodes.add(p)

    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for s in segments:
        direction = s.b - s.a
        on_segment = [p for p in nodes if p in (s.a, s.b) or point_in_open_segment(p, s)]
        on_segment.sort(key=lambda p: (p.x - s.a.x) * direction.x + (p.y - s.a.y) * direction.y)
        graph.add_edges_from(zip(on_segment, on_segment[1:]))

    rotation = {
        v: sorted(
            graph.neighbors(v),
            key=cmp_to_key(lambda a, b, v=v: _compare_directions(a - v, b - v)),
        )
        for v in graph.nodes
    }
    visited: set[tuple[Point, Point]] = set()
    faces: list[tuple[Point, ...]] = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in visited:
                continue
            walk: list[Point] = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                walk.append(a)
                around = rotation[b]
                a, b = b, around[(around.index(a) - 1) % len(around)]
            faces.append(_rotate_to_min(walk))
    faces.sort()
    return _Subdivision(graph, tuple(faces), vertex_at)


@dataclass(frozen=True)
class Planarization:
    """The arrangement as a plane multigraph H.

    Nodes are the touch points of the arrangement: endpoints of extensions
    and, when nothing is extended, the hull vertices. Arcs are the polylines
    between consecutive nodes.
    """

    nodes: tuple[Point, ...]
    arcs: tuple[tuple[Point, ...], ...]
    faces: tuple[tuple[Point, ...], ...]
    red_edge_count: int
    connected: bool

    @property
    def euler_characteristic(self) -> int:
        return len(self.nodes) - len(self.arcs) + len(self.faces)

    @property
    def satisfies_euler(self) -> bool:
        return self.connected and self.euler_characteristic == 2

    @property
    def satisfies_arc_count(self) -> bool:
        """Arcs equal nodes plus red inner edges."""
        return len(self.arcs) == len(self.nodes) + self.red_edge_count


def planarize(arr: ExtensionArrangement) -> Planarization:
    """Build the planarization H of an arrangement."""
    sub = arr.subdivision
    graph = sub.graph
    nodes = {v for v in graph.nodes if graph.degree(v) != 2}
    if not nodes:
        nodes = {arr.base.vertices[i] for i in arr.hull}

    arcs: set[tuple[Point, ...]] = set()
    for start in nodes:
        for first in graph.neighbors(start):
            path = [start, first]
            while path[-1] not in nodes:
                prev, cur = path[-2], path[-1]
                path.append(next(w for w in graph.neighbors(cur) if w != prev))
            arcs.add(min(tuple(path), tuple(reversed(path))))

    return Planarization(
        nodes=tuple(sorted(nodes)),
        arcs=tuple(sorted(arcs)),
        faces=sub.faces,
        red_edge_count=arr.red_edge_count,
        connected=nx.is_connected(graph),
    )


@dataclass(frozen=True)
class Cell:
    """A bounded region of the arrangement.

    ``boundary`` lists the touch points and vertices around the cell
    counterclockwise; ``boundary_vertices`` are the drawing vertices among
    them, in the same order.
    """

    boundary: tuple[Point, ...]
    boundary_vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary_vertices)

    @property
    def sides(self) -> list[tuple[Point, Point]]:
        m = len(self.boundary)
        return [(self.boundary[i], self.boundary[(i + 1) % m]) for i in range(m)]

    def is_convex(self) -> bool:
        m = len(self.boundary)
        return all(
            cross(self.boundary[i], self.boundary[(i + 1) % m], self.boundary[(i + 2) % m]) >= 0
            for i in range(m)
        )


def cells(arr: ExtensionArrangement) -> list[Cell]:
    """Return the inner cells of the arrangement."""
    sub = arr.subdivision
    return [
        Cell(face, tuple(sub.vertex_at[p] for p in face if p in sub.vertex_at))
        for face in sub.inner_faces
    ]


def verify_incidences(arr: ExtensionArrangement, cell_list: Sequence[Cell]) -> bool:
    """Every red-incident vertex lies on exactly (red degree + 1) cells."""
    incident: dict[int, int] = {}
    for cell in cell_list:
        for v in set(cell.boundary_vertices):
            incident[v] = incident.get(v, 0) + 1
    return all(incident.get(v, 0) == d + 1 for v, d in arr.red_degree().items())


def interior_vertex_extensions(arr: ExtensionArrangement) -> dict[int, int]:
    """For red-incident vertices off the hull, the extensions passing through them."""
    hull = set(arr.hull)
    return {
        v: sum(point_in_open_segment(arr.base.vertices[v], s) for s in arr.extensions)
        for v in arr.red_degree()
        if v not in hull
    }


def extensions_disjoint(arr: ExtensionArrangement) -> bool:
    """No extension crosses another, a foreign red edge or the outer cycle."""
    hull = arr.outer_cycle_segments
    for i, ext in enumerate(arr.extensions):
        if any(segments_cross(ext, other) for other in arr.extensions[i + 1 :]):
            return False
        if any(segments_cross(ext, h) for h in hull):
            return False
        for f in arr.red_order:
            if f != arr.red_order[i] and segments_cross(ext, arr.base.segment(f)):
                return False
    return True


@dataclass(frozen=True)
class CountingIdentity:
    """Both sides of red edges + sum(||c|| - 3) = |V| - |V0| - 3.

    V0 are the vertices off the hull without red edges. The lower bound
    side compares the left-hand side with n' - 3, n' the hull size.
    """

    red_edges: int
    cell_excess: int
    vertices: int
    isolated_interior: int
    hull_vertices: int

    @property
    def lhs(self) -> int:
        return self.red_edges + self.cell_excess

    @property
    def rhs(self) -> int:
        return self.vertices - self.isolated_interior - 3

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def lower_bound_holds(self) -> bool:
        return self.lhs >= self.hull_vertices - 3


def counting_identity(arr: ExtensionArrangement, cell_list: Sequence[Cell]) -> CountingIdentity:
    hull = set(arr.hull)
    red = arr.red_degree()
    isolated = sum(1 for v in range(arr.base.n) if v not in hull and v not in red)
    return CountingIdentity(
        red_edges=arr.red_edge_count,
        cell_excess=sum(c.size - 3 for c in cell_list),
        vertices=arr.base.n,
        isolated_interior=isolated,
        hull_vertices=len(arr.hull),
    )


def _fan(boundary_vertices: Sequence[int], apex: int) -> list[Edge]:
    if len(boundary_vertices) < 4:
        return []
    start = boundary_vertices.index(apex)
    ring = list(boundary_vertices[start:]) + list(boundary_vertices[:start])
    return [normalize_edge(ring[0], ring[j]) for j in range(2, len(ring) - 1)]


def _cell_fan(boundary_vertices: Sequence[int], drawn: set[Edge]) -> list[Edge] | None:
    """First fan, by apex index, whose diagonals are all undrawn.

    Drawn diagonals of a cell are blue and pairwise non-crossing, so some
    ear tip of a triangulation containing them is a valid apex.
    """
    for apex in sorted(boundary_vertices):
        fan = _fan(boundary_vertices, apex)
        if not any(d in drawn for d in fan):
            return fan
    return None


def triangulate_cells(
    drawing: Drawing, coloring: Coloring, arr: ExtensionArrangement
) -> tuple[Drawing, Coloring]:
    """Add red diagonals triangulating every cell's vertex polygon.

    Each cell is fanned from its lowest-index boundary vertex unless that
    fan reuses a drawn (blue) edge, in which case the next apex by index is
    tried. A cell with no such apex keeps the lowest fan minus its drawn
    diagonals, and the shortfall against sum(max(0, ||c|| - 3)) is logged
    as a warning.

    Raises:
        ThicksatError: If the arrangement was built over another drawing
    """
    if arr.base != drawing or arr.coloring != coloring:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            "Arrangement does not belong to the given drawing and coloring",
            {},
        )
    edges = set(drawing.edges)
    colors = dict(coloring.color_of)
    expected = 0
    added = 0
    for cell in cells(arr):
        expected += max(0, cell.size - 3)
        fan = _cell_fan(cell.boundary_vertices, edges)
        if fan is None:
            logger.debug("no undrawn fan in cell %s", cell.boundary_vertices)
            lowest = _fan(cell.boundary_vertices, min(cell.boundary_vertices))
            fan = [d for d in lowest if d not in edges]
        for diagonal in fan:
            edges.add(diagonal)
            colors[diagonal] = RED
            added += 1
    if added < expected:
        logger.warning(
            "cell triangulation added %d red edges, cells allow %d", added, expected
        )
    if not added:
        return drawing, coloring
    return Drawing(drawing.vertices, frozenset(edges), drawing.k), Coloring(colors)


def saturate_theta2(drawing: Drawing, coloring: Coloring) -> tuple[Drawing, Coloring]:
    """Saturate a two-colored drawing to at least 3n - 6 edges.

    Completes the blue class to a triangulation, extends the red edges,
    triangulates every cell in red and finishes with a precolored greedy
    pass.

    Raises:
        ThicksatError: If k != 2, n < 3, the coloring is invalid, or the
            points are not in general position
    """
    if drawing.n < 3:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Saturation with extensions needs n >= 3, got {drawing.n}",
            {"n": drawing.n},
        )
    blue_drawing, blue_coloring = complete_blue_triangulation(drawing, coloring)
    arr = extend_edges(blue_drawing, blue_coloring)
    celled, celled_coloring = triangulate_cells(blue_drawing, blue_coloring, arr)
    result, result_coloring = greedy_saturate(
        celled, celled_coloring, 2, SaturationMode.PRECOLORED
    )
    logger.debug(
        "saturation with extensions: %d -> %d -> %d -> %d edges",
        len(drawing.edges),
        len(blue_drawing.edges),
        len(celled.edges),
        len(result.edges),
    )
    assert len(result.edges) >= 3 * drawing.n - 6, "fewer than 3n - 6 edges after saturation"
    return result, result_coloring


@dataclass(frozen=True)
class ExtensionReport:
    """Every structural check on one arrangement, plus the cell triangulation count."""

    red_edges: int
    cell_sizes: tuple[int, ...]
    incidences_ok: bool
    interior_vertices_ok: bool
    extensions_disjoint: bool
    cells_convex: bool
    euler_ok: bool
    arc_count_ok: bool
    identity: CountingIdentity
    added_diagonals: int
    expected_diagonals: int

    @property
    def cell_count(self) -> int:
        return len(self.cell_sizes)

    @property
    def cell_count_ok(self) -> bool:
        return self.cell_count == self.red_edges + 1

    @property
    def ok(self) -> bool:
        return (
            self.cell_count_ok
            and self.incidences_ok
            and self.interior_vertices_ok
            and self.extensions_disjoint
            and self.cells_convex
            and self.euler_ok
            and self.arc_count_ok
            and self.identity.holds
            and self.identity.lower_bound_holds
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "red_edges": self.red_edges,
            "cell_count": self.cell_count,
            "cell_sizes": list(self.cell_sizes),
            "cell_count_ok": self.cell_count_ok,
            "incidences_ok": self.incidences_ok,
            "interior_vertices_ok": self.interior_vertices_ok,
            "extensions_disjoint": self.extensions_disjoint,
            "cells_convex": self.cells_convex,
            "euler_ok": self.euler_ok,
            "arc_count_ok": self.arc_count_ok,
            "identity": {
                "lhs": self.identity.lhs,
                "rhs": self.identity.rhs,
                "holds": self.identity.holds,
                "lower_bound": self.identity.hull_vertices - 3,
                "lower_bound_holds": self.identity.lower_bound_holds,
            },
            "added_diagonals": self.added_diagonals,
            "expected_diagonals": self.expected_diagonals,
            "ok": self.ok,
        }


def extension_report(arr: ExtensionArrangement) -> ExtensionReport:
    """Run all arrangement checks and count the red cell diagonals."""
    cell_list = cells(arr)
    planar = planarize(arr)
    triangulated, _ = triangulate_cells(arr.base, arr.coloring, arr)
    return ExtensionReport(
        red_edges=arr.red_edge_count,
        cell_sizes=tuple(c.size for c in cell_list),
        incidences_ok=verify_incidences(arr, cell_list),
        interior_vertices_ok=all(count == 1 for count in interior_vertex_extensions(arr).values()),
        extensions_disjoint=extensions_disjoint(arr),
        cells_convex=all(
            c.is_convex() and in_convex_position([arr.base.vertices[v] for v in c.boundary_vertices])
            for c in cell_list
        ),
        euler_ok=planar.satisfies_euler,
        arc_count_ok=planar.satisfies_arc_count,
        identity=counting_identity(arr, cell_list),
        added_diagonals=len(triangulated.edges) - len(arr.base.edges),
        expected_diagonals=sum(max(0, c.size - 3) for c in cell_list),
    )


def saturate_drawing(
    drawing: Drawing,
    coloring: Coloring | None,
    mode: SaturationMode = SaturationMode.PRECOLORED,
    budget: SearchBudget | None = None,
) -> tuple[Drawing, Coloring]:
    """Saturate a drawing in either setting.

    Free saturation of a non-convex drawing with k = 2 in general position
    runs ``saturate_theta2`` first, which may recolor existing edges. In the
    precolored setting existing colors are kept and only the greedy pass
    runs. A missing or, in the free setting, invalid coloring is replaced
    by one found by search.

    Raises:
        ThicksatError: If no k-coloring exists or a precolored coloring is invalid
        InconclusiveError: If a free-mode search exhausts its budget
    """
    free = mode is SaturationMode.FREE
    if coloring is None or (free and not validate(drawing, coloring).ok):
        coloring = k_colorable(drawing, budget=budget)
        if coloring is None:
            raise ThicksatError(
                ERROR_INVALID_COLORING,
                f"Drawing has no {drawing.k}-coloring without monochromatic crossings",
                {"k": drawing.k},
            )
    if (
        free
        and drawing.k == 2
        and drawing.n >= 3
        and not is_convex(drawing)
        and general_position(drawing.vertices)
    ):
        logger.info("running the extension pipeline before free saturation")
        drawing, coloring = saturate_theta2(drawing, coloring)
    return greedy_saturate(drawing, coloring, drawing.k, mode, budget)
