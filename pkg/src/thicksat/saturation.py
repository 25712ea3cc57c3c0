"""Saturation in the precolored and the free setting.

A drawing is saturated when no missing straight-line edge can be added while
keeping thickness at most k. In the precolored setting only the new edge may
pick a color; in the free setting the whole drawing may be recolored, which
turns the question into exact k-coloring of conflict graphs.
"""

import logging
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import cast

import networkx as nx

from thicksat.config import DEFAULT_MAX_NODES
from thicksat.drawing import (
    Coloring,
    Drawing,
    Edge,
    conflict_graph,
    normalize_edge,
    outer_cycle,
    require_valid,
    validate,
)
from thicksat.errors import (
    ERROR_EDGE_PRESENT,
    ERROR_INVALID_COLORING,
    ERROR_INVALID_PARAMETERS,
    InconclusiveError,
    ThicksatError,
)
from thicksat.geom import general_position, segments_cross

logger = logging.getLogger(__name__)

BLUE = 1
RED = 2


class SaturationMode(str, Enum):
    """Whether the certifying coloring is fixed or may change."""

    PRECOLORED = "precolored"
    FREE = "free"


@dataclass(frozen=True)
class SearchBudget:
    """Node limit for backtracking searches."""

    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ThicksatError(
                ERROR_INVALID_PARAMETERS,
                f"max_nodes must be at least 1, got {self.max_nodes}",
                {"provided": self.max_nodes},
            )


def color_graph(
    graph: nx.Graph, k: int, budget: SearchBudget | None = None
) -> dict[Hashable, int] | None:
    """Find a proper vertex coloring with colors 1..k.

    DSATUR backtracking: the next vertex has the most distinct neighbor
    colors, ties broken by degree. A vertex may only open the next unused
    color, so the first vertex always gets color 1.

    Args:
        graph: Graph with sortable node labels
        k: Number of colors
        budget: Node limit for the search

    Returns:
        Mapping from node to color, or None if no k-coloring exists

    Raises:
        InconclusiveError: If the node limit is reached first
    """
    budget = budget or SearchBudget()
    nodes = sorted(graph.nodes)
    adj = {v: set(graph.neighbors(v)) for v in nodes}
    colors: dict[Hashable, int] = {v: 1 for v in nodes if not adj[v]}
    active = [v for v in nodes if adj[v]]
    if not active:
        return colors if k >= 1 or not nodes else None
    if k < 2:
        return None

    rank = {v: i for i, v in enumerate(active)}
    counts = {v: [0] * (k + 1) for v in active}
    saturation = dict.fromkeys(active, 0)
    uncolored = set(active)
    visited = 0

    def assign(v: Hashable, c: int) -> None:
        colors[v] = c
        uncolored.discard(v)
        for u in adj[v]:
            if u in uncolored:
                if counts[u][c] == 0:
                    saturation[u] += 1
                counts[u][c] += 1

    def unassign(v: Hashable, c: int) -> None:
        del colors[v]
        uncolored.add(v)
        for u in adj[v]:
            if u in uncolored:
                counts[u][c] -= 1
                if counts[u][c] == 0:
                    saturation[u] -= 1

    def backtrack(used: int) -> bool:
        nonlocal visited
        visited += 1
        if visited > budget.max_nodes:
            raise InconclusiveError(
                f"Coloring search exceeded {budget.max_nodes} nodes",
                {"max_nodes": budget.max_nodes, "k": k, "graph_nodes": len(nodes)},
            )
        if not uncolored:
            return True
        v = max(uncolored, key=lambda u: (saturation[u], len(adj[u]), -rank[u]))
        if saturation[v] >= k:
            return False
        for c in range(1, min(used + 1, k) + 1):
            if counts[v][c]:
                continue
            assign(v, c)
            if backtrack(max(used, c)):
                return True
            unassign(v, c)
        return False

    found = backtrack(0)
    logger.debug("coloring search: k=%d nodes=%d visited=%d found=%s", k, len(nodes), visited, found)
    return dict(colors) if found else None


def k_colorable(
    drawing: Drawing, k: int | None = None, budget: SearchBudget | None = None
) -> Coloring | None:
    """Return a coloring certifying thickness k, or None if none exists.

    Args:
        drawing: The drawing to color
        k: Number of colors (defaults to ``drawing.k``)
        budget: Node limit for the search

    Raises:
        InconclusiveError: If the search budget is exhausted
    """
    k = drawing.k if k is None else k
    result = color_graph(conflict_graph(drawing).graph, k, budget)
    if result is None:
        return None
    return Coloring(cast(dict[Edge, int], result))


def _addable_colors(drawing: Drawing, coloring: Coloring, uv: Edge, k: int) -> set[int]:
    segment = drawing.segment(uv)
    blocked = {
        coloring[e] for e, s in drawing.segments.items() if segments_cross(segment, s)
    }
    return set(range(1, k + 1)) - blocked


def addable_colors_precolored(
    drawing: Drawing, coloring: Coloring, uv: tuple[int, int]
) -> set[int]:
    """Return the colors a missing edge could take without a monochromatic crossing.

    Raises:
        ThicksatError: If uv is already an edge or the coloring is invalid
    """
    edge = normalize_edge(*uv)
    if edge in drawing.edges:
        raise ThicksatError(
            ERROR_EDGE_PRESENT, f"Edge {edge} is already in the drawing", {"edge": list(edge)}
        )
    require_valid(drawing, coloring)
    return _addable_colors(drawing, coloring, edge, drawing.k)


def _base_coloring(
    drawing: Drawing, coloring: Coloring | None, k: int, budget: SearchBudget | None
) -> Coloring:
    if coloring is not None and validate(drawing.with_k(k), coloring).ok:
        return coloring
    found = k_colorable(drawing, k, budget)
    if found is None:
        raise ThicksatError(
            ERROR_INVALID_COLORING,
            f"Drawing has no coloring with {k} colors and no monochromatic crossing",
            {"k": k, "edges": len(drawing.edges)},
        )
    return found


def _candidates(drawing: Drawing, order: Sequence[tuple[int, int]] | None) -> list[Edge]:
    if order is None:
        return list(combinations(range(drawing.n), 2))
    return [normalize_edge(u, v) for u, v in order]


def witness_addable_edge(
    drawing: Drawing,
    coloring: Coloring | None,
    k: int | None = None,
    mode: SaturationMode = SaturationMode.PRECOLORED,
    budget: SearchBudget | None = None,
) -> tuple[Edge, Coloring] | None:
    """Find the first missing edge that can be added.

    Returns:
        The edge and a coloring of the enlarged drawing certifying it, or None
        when the drawing is saturated

    Raises:
        ThicksatError: If a precolored check gets no valid coloring
        InconclusiveError: If a free-mode search exhausts its budget
    """
    k = drawing.k if k is None else k
    if mode is SaturationMode.PRECOLORED:
        if coloring is None:
            raise ThicksatError(
                ERROR_INVALID_PARAMETERS, "Precolored saturation needs a coloring", {}
            )
        require_valid(drawing.with_k(k), coloring)
        for uv in drawing.non_edges():
            colors = _addable_colors(drawing, coloring, uv, k)
            if colors:
                return uv, coloring.with_color(uv, min(colors))
        return None

    base = _base_coloring(drawing, coloring, k, budget)
    for uv in drawing.non_edges():
        colors = _addable_colors(drawing, base, uv, k)
        if colors:
            return uv, base.with_color(uv, min(colors))
        witness = k_colorable(drawing.with_edge(uv), k, budget)
        if witness is not None:
            return uv, witness
    return None


def is_saturated(
    drawing: Drawing,
    coloring: Coloring | None,
    k: int | None = None,
    mode: SaturationMode = SaturationMode.PRECOLORED,
    budget: SearchBudget | None = None,
) -> bool:
    """Return True iff no missing edge can be added under the given mode.

    Raises:
        ThicksatError: If a precolored check gets no valid coloring
        InconclusiveError: If a free-mode search exhausts its budget
    """
    return witness_addable_edge(drawing, coloring, k, mode, budget) is None


def greedy_saturate(
    drawing: Drawing,
    coloring: Coloring | None,
    k: int | None = None,
    mode: SaturationMode = SaturationMode.PRECOLORED,
    budget: SearchBudget | None = None,
    candidate_order: Sequence[tuple[int, int]] | None = None,
) -> tuple[Drawing, Coloring]:
    """Add missing edges in candidate order until the drawing is saturated.

    Precolored mode gives each added edge its smallest admissible color.
    Free mode keeps a witness coloring of the growing drawing. A single pass
    suffices in both modes: a candidate rejected once stays rejected because
    edges are only ever added.

    Args:
        drawing: Input drawing
        coloring: Its coloring (required in precolored mode)
        k: Number of colors (defaults to ``drawing.k``)
        mode: Precolored or free
        budget: Node limit for free-mode searches
        candidate_order: Vertex pairs to try, lexicographic by default

    Returns:
        The saturated drawing and its coloring

    Raises:
        ThicksatError: If the input does not validate
        InconclusiveError: If a free-mode search exhausts its budget
    """
    k = drawing.k if k is None else k
    current = drawing.with_k(k)
    if mode is SaturationMode.PRECOLORED:
        if coloring is None:
            raise ThicksatError(
                ERROR_INVALID_PARAMETERS, "Precolored saturation needs a coloring", {}
            )
        require_valid(current, coloring)
        colors = dict(coloring.color_of)
        added: list[Edge] = []
        for uv in _candidates(current, candidate_order):
            if uv in current.edges:
                continue
            admissible = _addable_colors(current, Coloring(colors), uv, k)
            if admissible:
                colors[uv] = min(admissible)
                current = current.with_edge(uv)
                added.append(uv)
        logger.debug("precolored greedy saturation added %d edges", len(added))
        return current, (Coloring(colors) if added else coloring)

    base = _base_coloring(current, coloring, k, budget)
    added_count = 0
    for uv in _candidates(current, candidate_order):
        if uv in current.edges:
            continue
        admissible = _addable_colors(current, base, uv, k)
        if admissible:
            base = base.with_color(uv, min(admissible))
            current = current.with_edge(uv)
            added_count += 1
            continue
        witness = k_colorable(current.with_edge(uv), k, budget)
        if witness is not None:
            current = current.with_edge(uv)
            base = witness
            added_count += 1
    logger.debug("free greedy saturation added %d edges", added_count)
    return current, base


def complete_blue_triangulation(
    drawing: Drawing, coloring: Coloring
) -> tuple[Drawing, Coloring]:
    """Grow the blue class into a triangulation of the point set.

    Scans all vertex pairs and makes a pair blue (adding it, or recoloring it
    from red) whenever its segment crosses no blue edge, until a full scan
    changes nothing. The result has 3n - 3 - n' blue edges, n' being the
    number of hull vertices.

    Raises:
        ThicksatError: If k != 2, the coloring is invalid, or the points are
            not in general position
    """
    if drawing.k != 2:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Blue triangulation needs k = 2, got k = {drawing.k}",
            {"k": drawing.k},
        )
    if not general_position(drawing.vertices):
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS, "Blue triangulation needs points in general position", {}
        )
    require_valid(drawing, coloring)

    edges = set(drawing.edges)
    colors = dict(coloring.color_of)
    blue = [drawing.segment(e) for e in sorted(edges) if colors[e] == BLUE]
    changed = True
    while changed:
        changed = False
        for uv in combinations(range(drawing.n), 2):
            if uv in edges and colors[uv] == BLUE:
                continue
            segment = drawing.segment(uv)
            if any(segments_cross(segment, b) for b in blue):
                continue
            edges.add(uv)
            colors[uv] = BLUE
            blue.append(segment)
            changed = True

    result = Drawing(drawing.vertices, frozenset(edges), 2)
    if drawing.n >= 3:
        expected = 3 * drawing.n - 3 - len(outer_cycle(result))
        if len(blue) != expected:
            logger.warning(
                "blue triangulation has %d edges, Euler count is %d", len(blue), expected
            )
    if result == drawing and colors == dict(coloring.color_of):
        return drawing, coloring
    return result, Coloring(colors)
