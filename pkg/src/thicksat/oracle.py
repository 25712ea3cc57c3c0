"""Exhaustive ground truth for small convex drawings.

In convex position two chords cross exactly when their endpoints
interleave on the circle, so convex drawings can be enumerated without
geometry. Precolored-saturated drawings are enumerated directly; free
saturated drawings are the inclusion-maximal k-colorable chord sets, which
form a subset of the precolored ones.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

import networkx as nx

from thicksat.config import DEFAULT_ENUMERATION_NODES, enumeration_cap
from thicksat.convex import bounds, build_zigzag, interleaves, regular_polygon
from thicksat.drawing import Coloring, Drawing, Edge, normalize_edge
from thicksat.errors import (
    ERROR_CAP_EXCEEDED,
    ERROR_INVALID_PARAMETERS,
    InconclusiveError,
    ThicksatError,
)
from thicksat.saturation import SaturationMode, SearchBudget, color_graph

logger = logging.getLogger(__name__)

# A chord with its color; color 0 marks an uncolored chord
ColoredChord = tuple[int, int, int]


def _chords_cross(n: int, e: Edge, f: Edge) -> bool:
    if len({*e, *f}) < 4:
        return False
    return interleaves(n, e[0], e[1], f[0], f[1])


def _hull_pairs(n: int) -> list[Edge]:
    return sorted(normalize_edge(i, (i + 1) % n) for i in range(n))


def _diagonals(n: int) -> list[Edge]:
    hull = set(_hull_pairs(n))
    return [e for e in combinations(range(n), 2) if e not in hull]


@dataclass(frozen=True)
class CircularDrawing:
    """A convex drawing given only by its circular vertex order 0..n-1."""

    n: int
    chords: frozenset[Edge]

    @classmethod
    def create(cls, n: int, chords: Iterable[tuple[int, int]]) -> "CircularDrawing":
        return cls(n, frozenset(normalize_edge(u, v) for u, v in chords))

    def conflict_graph(self) -> nx.Graph:
        """Graph on the chords; adjacency is interleaving."""
        graph = nx.Graph()
        chords = sorted(self.chords)
        graph.add_nodes_from(chords)
        for e, f in combinations(chords, 2):
            if _chords_cross(self.n, e, f):
                graph.add_edge(e, f)
        return graph

    def to_drawing(self, k: int = 2) -> Drawing:
        """Realize the drawing on an exact regular polygon."""
        return Drawing(tuple(regular_polygon(self.n)), self.chords, k)


def _dihedral_maps(n: int) -> list[list[int]]:
    maps = [[(i + r) % n for i in range(n)] for r in range(n)]
    maps += [[(r - i) % n for i in range(n)] for r in range(n)]
    return maps


def canonical_form(
    n: int,
    chords: Iterable[tuple[int, int]],
    colors: dict[Edge, int] | None = None,
) -> tuple[ColoredChord, ...]:
    """Smallest image of a chord set under the dihedral group of the n-cycle.

    With colors, the images are compared after renaming colors in order of
    first appearance, so drawings equal up to color permutation share a form.
    """
    normalized = [normalize_edge(u, v) for u, v in chords]
    best: tuple[ColoredChord, ...] | None = None
    for mapping in _dihedral_maps(n):
        image = sorted(
            (normalize_edge(mapping[u], mapping[v]), colors[(u, v)] if colors else 0)
            for u, v in normalized
        )
        rename: dict[int, int] = {}
        form = []
        for (u, v), c in image:
            if c and c not in rename:
                rename[c] = len(rename) + 1
            form.append((u, v, rename.get(c, 0)))
        candidate = tuple(form)
        if best is None or candidate < best:
            best = candidate
    return best or ()


@dataclass(frozen=True)
class EnumerationResult:
    """Extremal saturated convex drawings for given n, k and mode.

    ``instances_examined`` counts the saturated colored configurations the
    search reached; ``distinct_instances`` counts them up to symmetry.
    """

    n: int
    k: int
    mode: SaturationMode
    min_edges: int
    max_edges: int
    witness_min: CircularDrawing
    witness_max: CircularDrawing
    coloring_min: Coloring | None
    coloring_max: Coloring | None
    instances_examined: int
    distinct_instances: int
    canonical_forms: frozenset[tuple[ColoredChord, ...]] = field(default_factory=frozenset)

    def to_dict(self) -> dict[str, Any]:
        def coloring_rows(c: Coloring | None) -> list[list[int]] | None:
            if c is None:
                return None
            return [[u, v, c[(u, v)]] for u, v in sorted(c.color_of)]

        return {
            "n": self.n,
            "k": self.k,
            "mode": self.mode.value,
            "min_edges": self.min_edges,
            "max_edges": self.max_edges,
            "witness_min": [list(e) for e in sorted(self.witness_min.chords)],
            "witness_max": [list(e) for e in sorted(self.witness_max.chords)],
            "coloring_min": coloring_rows(self.coloring_min),
            "coloring_max": coloring_rows(self.coloring_max),
            "instances_examined": self.instances_examined,
            "distinct_instances": self.distinct_instances,
        }


@dataclass
class _Leaf:
    edges: list[Edge]
    colors: dict[Edge, int]


def _precolored_leaves(n: int, k: int, max_nodes: int) -> Iterator[_Leaf]:
    """All precolored-saturated colorings of the diagonals, colors in first-use order."""
    diagonals = _diagonals(n)
    count = len(diagonals)
    crossing = [0] * count
    for i, j in combinations(range(count), 2):
        if _chords_cross(n, diagonals[i], diagonals[j]):
            crossing[i] |= 1 << j
            crossing[j] |= 1 << i

    color_mask = [0] * (k + 1)
    assignment = [0] * count
    absent: list[int] = []
    visited = 0

    def blocked_by_all(a: int, undecided: int) -> bool:
        return all(crossing[a] & (color_mask[c] | undecided) for c in range(1, k + 1))

    def consistent(i: int) -> bool:
        undecided = ((1 << count) - 1) & ~((1 << (i + 1)) - 1)
        bit = 1 << i
        return all(
            blocked_by_all(a, undecided) for a in absent if a == i or crossing[a] & bit
        )

    def search(i: int, used: int) -> Iterator[_Leaf]:
        nonlocal visited
        visited += 1
        if visited > max_nodes:
            raise InconclusiveError(
                f"Enumeration exceeded {max_nodes} search nodes",
                {"n": n, "k": k, "max_nodes": max_nodes},
            )
        if i == count:
            colors = {diagonals[j]: assignment[j] for j in range(count) if assignment[j]}
            yield _Leaf(sorted(colors), colors)
            return
        bit = 1 << i
        for c in range(1, min(used + 1, k) + 1):
            if crossing[i] & color_mask[c]:
                continue
            color_mask[c] |= bit
            assignment[i] = c
            if consistent(i):
                yield from search(i + 1, max(used, c))
            assignment[i] = 0
            color_mask[c] &= ~bit
        absent.append(i)
        if consistent(i):
            yield from search(i + 1, used)
        absent.pop()

    yield from search(0, 0)
    logger.debug("precolored enumeration n=%d k=%d: %d search nodes", n, k, visited)


def _free_saturated(n: int, k: int, chords: list[Edge], budget: SearchBudget) -> bool:
    present = set(chords)
    base = CircularDrawing.create(n, chords)
    for d in _diagonals(n):
        if d in present:
            continue
        graph = CircularDrawing(n, base.chords | {d}).conflict_graph()
        if color_graph(graph, k, budget) is not None:
            return False
    return True


def enumerate_saturated(
    n: int,
    k: int,
    mode: SaturationMode = SaturationMode.PRECOLORED,
    budget: SearchBudget | None = None,
    cap: int | None = None,
    keep_all: bool = False,
) -> EnumerationResult:
    """Find the fewest and most edges of saturated convex drawings.

    Hull edges cross nothing and are present in every saturated drawing.

    Args:
        n: Number of vertices
        k: Number of colors
        mode: Precolored or free
        budget: Node limit for the search tree, and for each colorability
            check of the free mode
        cap: Largest admissible n (defaults to the configured cap)
        keep_all: Keep every canonical form in the result

    Raises:
        ThicksatError: If n exceeds the cap, n < 3 or k < 1
        InconclusiveError: If the search exceeds its node limit
    """
    if n < 3 or k < 1:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Enumeration needs n >= 3 and k >= 1, got n = {n}, k = {k}",
            {"n": n, "k": k},
        )
    limit = cap if cap is not None else enumeration_cap(mode is SaturationMode.PRECOLORED)
    if n > limit:
        raise ThicksatError(
            ERROR_CAP_EXCEEDED,
            f"Refusing to enumerate n = {n}: the {mode.value} cap is {limit}",
            {"n": n, "cap": limit, "mode": mode.value},
        )
    budget = budget or SearchBudget(DEFAULT_ENUMERATION_NODES)
    hull = _hull_pairs(n)

    def edge_count(leaf: _Leaf) -> int:
        return n + len(leaf.edges)

    examined = 0
    low: _Leaf | None = None
    high: _Leaf | None = None
    forms: set[tuple[ColoredChord, ...]] = set()
    rejected: set[tuple[ColoredChord, ...]] = set()
    for leaf in _precolored_leaves(n, k, budget.max_nodes):
        examined += 1
        if mode is SaturationMode.PRECOLORED:
            form = canonical_form(n, leaf.edges, leaf.colors)
        else:
            form = canonical_form(n, leaf.edges)
            if form in forms or form in rejected:
                continue
            if not _free_saturated(n, k, leaf.edges, budget):
                rejected.add(form)
                continue
        if form in forms:
            continue
        forms.add(form)
        if low is None or edge_count(leaf) < edge_count(low):
            low = leaf
        if high is None or edge_count(leaf) > edge_count(high):
            high = leaf
    # every k-colorable chord set extends to a saturated one
    assert low is not None and high is not None, "no saturated configuration found"

    def coloring_of(leaf: _Leaf) -> Coloring | None:
        if mode is SaturationMode.FREE:
            return None
        return Coloring({**dict.fromkeys(hull, 1), **leaf.colors})

    result = EnumerationResult(
        n=n,
        k=k,
        mode=mode,
        min_edges=edge_count(low),
        max_edges=edge_count(high),
        witness_min=CircularDrawing.create(n, hull + low.edges),
        witness_max=CircularDrawing.create(n, hull + high.edges),
        coloring_min=coloring_of(low),
        coloring_max=coloring_of(high),
        instances_examined=examined,
        distinct_instances=len(forms),
        canonical_forms=frozenset(forms) if keep_all else frozenset(),
    )
    logger.info(
        "enumerated n=%d k=%d %s: min=%d max=%d over %d classes",
        n,
        k,
        mode.value,
        result.min_edges,
        result.max_edges,
        result.distinct_instances,
    )
    return result


class NamedBound(str, Enum):
    """Edge-count bounds that enumeration can check."""

    MAX_CONVEX_UPPER = "max_convex_upper"
    PRECOLORED_MIN_UPPER = "precolored_min_upper"
    PRECOLORED_MIN_LOWER = "precolored_min_lower"
    K3_PRECOLORED_LOWER = "k3_precolored_lower"
    K3_FREE_LOWER = "k3_free_lower"
    THETA2_EXACT = "theta2_exact"


# bound -> (kind, mode it is checked in)
_BOUND_KIND: dict[NamedBound, tuple[str, SaturationMode]] = {
    NamedBound.MAX_CONVEX_UPPER: ("max_upper", SaturationMode.PRECOLORED),
    NamedBound.PRECOLORED_MIN_UPPER: ("min_upper", SaturationMode.PRECOLORED),
    NamedBound.PRECOLORED_MIN_LOWER: ("lower", SaturationMode.PRECOLORED),
    NamedBound.K3_PRECOLORED_LOWER: ("lower", SaturationMode.PRECOLORED),
    NamedBound.K3_FREE_LOWER: ("lower", SaturationMode.FREE),
    NamedBound.THETA2_EXACT: ("exact", SaturationMode.PRECOLORED),
}


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one named bound against enumeration."""

    bound: NamedBound
    kind: str
    value: int
    result: EnumerationResult

    @property
    def passed(self) -> bool:
        if self.kind == "lower":
            return self.result.min_edges >= self.value
        if self.kind == "max_upper":
            return self.result.max_edges <= self.value
        if self.kind == "min_upper":
            return self.result.min_edges <= self.value
        return self.result.min_edges == self.result.max_edges == self.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "bound": self.bound.value,
            "kind": self.kind,
            "value": self.value,
            "status": "PASS" if self.passed else "FAIL",
            "result": self.result.to_dict(),
        }


def _bound_value(bound: NamedBound, n: int, k: int) -> int | None:
    table = bounds(n, k)
    return {
        NamedBound.MAX_CONVEX_UPPER: table.max_convex,
        NamedBound.PRECOLORED_MIN_UPPER: table.precolored_min_upper,
        NamedBound.PRECOLORED_MIN_LOWER: table.precolored_min_lower,
        NamedBound.K3_PRECOLORED_LOWER: table.k3_precolored_lower,
        NamedBound.K3_FREE_LOWER: table.k3_free_lower,
        NamedBound.THETA2_EXACT: 3 * n - 6 if k == 2 else None,
    }[bound]


def verify_bound(
    n: int,
    k: int,
    bound: NamedBound,
    mode: SaturationMode | None = None,
    budget: SearchBudget | None = None,
    cap: int | None = None,
) -> BoundReport:
    """Check a named bound against every saturated drawing for n and k.

    Args:
        n: Number of vertices
        k: Number of colors
        bound: The bound to check
        mode: Overrides the mode the bound is stated for; only meaningful
            for the upper bounds and the exact k = 2 count
        budget: Node limit for the search tree
        cap: Largest admissible n

    Raises:
        ThicksatError: If the bound does not apply to n and k, or n exceeds the cap
        InconclusiveError: If the search exceeds its node limit
    """
    value = _bound_value(bound, n, k)
    if value is None:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Bound {bound.value} does not apply to n = {n}, k = {k}",
            {"bound": bound.value, "n": n, "k": k},
        )
    kind, default_mode = _BOUND_KIND[bound]
    result = enumerate_saturated(n, k, mode or default_mode, budget, cap)
    return BoundReport(bound, kind, value, result)


def zigzag_is_enumerated(n: int, k: int, cap: int | None = None) -> bool:
    """Return True iff the zigzag for n and k is among the enumerated precolored drawings."""
    drawing, coloring = build_zigzag(n, k)
    hull = set(_hull_pairs(n))
    inner = [e for e in drawing.sorted_edges() if e not in hull]
    form = canonical_form(n, inner, {e: coloring[e] for e in inner})
    result = enumerate_saturated(n, k, SaturationMode.PRECOLORED, cap=cap, keep_all=True)
    return form in result.canonical_forms
