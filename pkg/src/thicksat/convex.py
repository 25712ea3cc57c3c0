"""Constructions and closed-form bounds for convex drawings.

Vertices of a convex drawing are identified with their position 0..n-1 on
the outer cycle. Chords of a regular n-gon with the same index sum modulo n
are parallel; the nice matchings built here are exactly such parallel
classes, and tilting moves one class to a neighboring one.
"""

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from thicksat.drawing import Coloring, Drawing, Edge, is_convex, normalize_edge, require_valid
from thicksat.errors import (
    ERROR_INVALID_MATCHING,
    ERROR_INVALID_PARAMETERS,
    ERROR_NON_CONVEX,
    ThicksatError,
)
from thicksat.geom import Point, convex_hull, general_position

logger = logging.getLogger(__name__)

# Coordinates of generated polygons are rounded to this denominator
_POLYGON_DENOMINATOR = 10**6


class Side(str, Enum):
    """Which missing diagonal a tilt picks in each quadrilateral face."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class AngulationCount:
    """Inner edge count of an inner angulation.

    ``exact`` is False when (n - l) is not divisible by (l - 2); the count is
    then the floor of the formula.
    """

    inner_edges: int
    exact: bool


def inner_angulation_inner_edges(n: int, ell: int) -> AngulationCount:
    """Return (n - l) / (l - 2), the inner edges of an inner l-angulation.

    Raises:
        ThicksatError: If l < 3 or n < l
    """
    if ell < 3 or n < ell:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Inner angulations need l >= 3 and n >= l, got n={n}, l={ell}",
            {"n": n, "l": ell},
        )
    quotient, remainder = divmod(n - ell, ell - 2)
    return AngulationCount(quotient, remainder == 0)


def interleaves(n: int, a: int, b: int, c: int, d: int) -> bool:
    """Return True iff chords (a, b) and (c, d) cross in convex position.

    Exactly one of c, d must lie strictly between a and b on the circle.

    Raises:
        ThicksatError: If the four endpoints are not distinct modulo n
    """
    a, b, c, d = (x % n for x in (a, b, c, d))
    if len({a, b, c, d}) < 4:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Chord endpoints must be distinct modulo {n}, got ({a}, {b}) and ({c}, {d})",
            {"n": n, "chords": [[a, b], [c, d]]},
        )
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < d < hi)


def regular_polygon(n: int) -> list[Point]:
    """Place n points on the unit circle near a regular n-gon.

    Points use the rational parametrization of the circle, so they are
    exactly concyclic: strictly convex and in general position. They are
    listed counterclockwise.

    Raises:
        ThicksatError: If n < 3
    """
    if n < 3:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS, f"A polygon needs n >= 3, got {n}", {"n": n}
        )
    points: list[Point] = []
    for i in range(n):
        # quarter-step offset keeps every angle away from pi, where tan(theta/2) diverges
        theta = 2 * math.pi * (i + 0.25) / n
        t = Fraction(round(math.tan(theta / 2) * _POLYGON_DENOMINATOR), _POLYGON_DENOMINATOR)
        denom = 1 + t * t
        points.append(Point((1 - t * t) / denom, 2 * t / denom))
    assert len(set(points)) == n and general_position(points)
    return points


def _hull_sides(n: int) -> set[Edge]:
    return {normalize_edge(i, (i + 1) % n) for i in range(n)}


def _check_chords(n: int, chords: Iterable[tuple[int, int]]) -> list[Edge]:
    normalized: list[Edge] = []
    sides = _hull_sides(n)
    for u, v in chords:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ThicksatError(
                ERROR_INVALID_MATCHING,
                f"Chord ({u}, {v}) is not a pair of distinct positions in 0..{n - 1}",
                {"chord": [u, v], "n": n},
            )
        edge = normalize_edge(u, v)
        if edge in sides:
            raise ThicksatError(
                ERROR_INVALID_MATCHING,
                f"Chord {edge} is an edge of the outer cycle",
                {"chord": list(edge), "n": n},
            )
        normalized.append(edge)
    return sorted(set(normalized))


def outerplane_faces(n: int, chords: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Return the inner faces of the outer n-cycle plus non-crossing chords.

    Each face lists its vertices in circular order.

    Raises:
        ThicksatError: If a chord is invalid or two chords cross
    """
    pending = _check_chords(n, chords)
    for i, (a, b) in enumerate(pending):
        for c, d in pending[i + 1 :]:
            if len({a, b, c, d}) == 4 and interleaves(n, a, b, c, d):
                raise ThicksatError(
                    ERROR_INVALID_MATCHING,
                    f"Chords ({a}, {b}) and ({c}, {d}) cross",
                    {"chords": [[a, b], [c, d]]},
                )

    faces: list[tuple[int, ...]] = []
    remaining = set(pending)
    stack: list[tuple[int, ...]] = [tuple(range(n))]
    while stack:
        polygon = stack.pop()
        position = {v: i for i, v in enumerate(polygon)}
        split = next(
            (c for c in sorted(remaining) if c[0] in position and c[1] in position), None
        )
        if split is None:
            faces.append(polygon)
            continue
        remaining.discard(split)
        i, j = sorted((position[split[0]], position[split[1]]))
        stack.append(polygon[i : j + 1])
        stack.append(polygon[j:] + polygon[: i + 1])
    return sorted(faces, key=sorted)


def _dual_path(n: int, chords: Sequence[Edge]) -> list[tuple[int, ...]] | None:
    """Faces in path order if the weak dual is a path, else None."""
    faces = outerplane_faces(n, chords)
    chord_set = set(chords)
    face_chords = [
        {normalize_edge(f[i], f[(i + 1) % len(f)]) for i in range(len(f))} & chord_set
        for f in faces
    ]
    if any(len(fc) > 2 for fc in face_chords):
        return None
    ends = [i for i, fc in enumerate(face_chords) if len(fc) <= 1]
    if not ends:
        return None
    order = [ends[0]]
    used = set(order)
    while len(order) < len(faces):
        last = face_chords[order[-1]]
        following = [j for j in range(len(faces)) if j not in used and face_chords[j] & last]
        if len(following) != 1:
            return None
        order.append(following[0])
        used.add(following[0])
    return [faces[i] for i in order]


def is_nice_matching(n: int, chords: Iterable[tuple[int, int]]) -> bool:
    """Check the nice-matching invariant.

    The chords must be pairwise non-crossing inner diagonals whose
    outerplane graph with the outer cycle has a path as weak dual, with end
    faces of size 3 or 4 and all other faces of size 4.
    """
    try:
        normalized = _check_chords(n, chords)
        path = _dual_path(n, normalized)
    except ThicksatError:
        return False
    if path is None:
        return False
    if len(path) == 1:
        return len(path[0]) in (3, 4)
    ends_ok = len(path[0]) in (3, 4) and len(path[-1]) in (3, 4)
    return ends_ok and all(len(face) == 4 for face in path[1:-1])


@dataclass(frozen=True)
class NiceMatching:
    """Chords of a convex n-gon forming a nice matching.

    ``chords`` follow the order of the dual path. ``offset`` is the common
    index sum modulo n of a parallel class; it fixes the tilt direction in
    a chordless quadrilateral (only possible for n = 4).
    """

    n: int
    chords: tuple[Edge, ...]
    offset: int | None = None

    @classmethod
    def create(
        cls, n: int, chords: Iterable[tuple[int, int]], offset: int | None = None
    ) -> "NiceMatching":
        """Validate chords and order them along the dual path.

        Raises:
            ThicksatError: If the chords do not form a nice matching
        """
        normalized = _check_chords(n, chords)
        if not is_nice_matching(n, normalized):
            raise ThicksatError(
                ERROR_INVALID_MATCHING,
                f"Chords {normalized} do not form a nice matching on {n} vertices",
                {"n": n, "chords": [list(c) for c in normalized]},
            )
        path = _dual_path(n, normalized)
        assert path is not None
        ordered: list[Edge] = []
        chord_set = set(normalized)
        for face, following in zip(path, path[1:]):
            shared = set(_face_sides(face)) & set(_face_sides(following)) & chord_set
            ordered.extend(sorted(shared))
        if offset is None and normalized:
            sums = {(u + v) % n for u, v in normalized}
            if len(sums) == 1:
                offset = sums.pop()
        return cls(n, tuple(ordered), None if offset is None else offset % n)

    @property
    def chord_set(self) -> frozenset[Edge]:
        return frozenset(self.chords)

    def faces(self) -> list[tuple[int, ...]]:
        return outerplane_faces(self.n, self.chords)


def _face_sides(face: Sequence[int]) -> list[Edge]:
    return [normalize_edge(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def canonical_nice_matching(n: int) -> NiceMatching:
    """Return the parallel chords (i, n - i) for 1 <= i < n/2.

    Raises:
        ThicksatError: If n < 4
    """
    if n < 4:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS, f"Nice matchings need n >= 4, got {n}", {"n": n}
        )
    # for odd n the middle pair ((n-1)/2, (n+1)/2) is an outer-cycle edge
    chords = [(i, n - i) for i in range(1, (n - 2) // 2 + 1)]
    return NiceMatching.create(n, chords, offset=0)


def tilt(m: NiceMatching, side: Side) -> NiceMatching:
    """Return the left or right tilt of a nice matching.

    In every quadrilateral face with circular vertices a, b, c, d, where
    (b, c) and (d, a) are the sides the dual path runs through, the left
    tilt takes (a, c) and the right tilt takes (b, d). Triangles contribute
    nothing. Left and right tilts are mutually inverse.

    Raises:
        ThicksatError: If m is not a valid nice matching or a face is ambiguous
    """
    if not is_nice_matching(m.n, m.chords):
        raise ThicksatError(
            ERROR_INVALID_MATCHING,
            "Cannot tilt an invalid nice matching",
            {"n": m.n, "chords": [list(c) for c in m.chords]},
        )
    picked: list[Edge] = []
    for face in outerplane_faces(m.n, m.chords):
        if len(face) == 3:
            continue
        sides = _face_sides(face)
        through = [i for i, s in enumerate(sides) if s in m.chord_set]
        if len(through) == 1:
            through.append((through[0] + 2) % 4)
        elif not through:
            if m.offset is None:
                raise ThicksatError(
                    ERROR_INVALID_MATCHING,
                    f"Face {face} has no chord and the matching carries no offset",
                    {"face": list(face)},
                )
            through = [i for i, (u, v) in enumerate(sides) if (u + v) % m.n == m.offset]
        if sorted(through) not in ([0, 2], [1, 3]):
            raise ThicksatError(
                ERROR_INVALID_MATCHING,
                f"Face {face} is not entered through opposite sides",
                {"face": list(face)},
            )
        start = min(set(range(4)) - set(through))
        a, b, c, d = (face[(start + j) % 4] for j in range(4))
        picked.append(normalize_edge(a, c) if side is Side.LEFT else normalize_edge(b, d))

    offset = None
    if m.offset is not None:
        offset = (m.offset + (-1 if side is Side.LEFT else 1)) % m.n
    return NiceMatching.create(m.n, picked, offset)


def zigzag_matchings(n: int, k: int) -> list[NiceMatching]:
    """Return M_1, ..., M_k with M_i the right tilt of M_(i-1).

    M_1 is the left tilt of the canonical matching, so that the first
    middle color class is the canonical matching itself.
    """
    current = tilt(canonical_nice_matching(n), Side.LEFT)
    sequence = [current]
    for _ in range(k - 1):
        current = tilt(current, Side.RIGHT)
        sequence.append(current)
    return sequence


def build_zigzag(n: int, k: int) -> tuple[Drawing, Coloring]:
    """Build the precolored zigzag drawing on n vertices with k colors.

    The outer cycle gets color 1. Inner edges of color 1 are M_1 and its
    left tilt, color i (1 < i < k) is M_i, and color k is M_k and its right
    tilt.

    Raises:
        ThicksatError: If n < 5, k < 2 or k > n/2
    """
    if n < 5:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS, f"Zigzags need n >= 5, got n = {n}", {"n": n}
        )
    if k < 2 or 2 * k > n:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Zigzags need 2 <= k <= n/2 so that color classes stay disjoint, got k = {k}, n = {n}",
            {"n": n, "k": k, "condition": "k <= n/2"},
        )
    matchings = zigzag_matchings(n, k)
    classes: dict[int, set[Edge]] = {1: set(_hull_sides(n))}
    classes[1] |= set(matchings[0].chords) | set(tilt(matchings[0], Side.LEFT).chords)
    for i in range(2, k):
        classes[i] = set(matchings[i - 1].chords)
    classes[k] = set(matchings[-1].chords) | set(tilt(matchings[-1], Side.RIGHT).chords)

    colors: dict[Edge, int] = {}
    for color, members in classes.items():
        for e in members:
            assert e not in colors, f"zigzag color classes overlap at {e}"
            colors[e] = color
    drawing = Drawing(tuple(regular_polygon(n)), frozenset(colors), k)
    logger.debug("zigzag n=%d k=%d has %d edges", n, k, len(colors))
    return drawing, Coloring(colors)


def _hull_positions(drawing: Drawing) -> dict[int, int]:
    if not is_convex(drawing):
        raise ThicksatError(
            ERROR_NON_CONVEX, "Face sizes need a drawing in convex position", {}
        )
    return {v: i for i, v in enumerate(convex_hull(drawing.vertices))}


def color_class_chords(drawing: Drawing, coloring: Coloring, color: int) -> list[Edge]:
    """Inner edges of one color class, as pairs of hull positions.

    Raises:
        ThicksatError: If the drawing is not convex
    """
    position = _hull_positions(drawing)
    n = drawing.n
    sides = _hull_sides(n)
    mapped = (normalize_edge(position[u], position[v]) for u, v in coloring.edges_of(color))
    return sorted(e for e in mapped if e not in sides)


def check_face_sizes(drawing: Drawing, coloring: Coloring, k: int | None = None) -> dict[int, int]:
    """Largest inner face of each color class together with the outer cycle.

    Args:
        drawing: A convex drawing
        coloring: A valid coloring of it
        k: Colors to report, 1..k (defaults to ``drawing.k``)

    Returns:
        Mapping from color to its maximum inner face size

    Raises:
        ThicksatError: If the drawing is not convex or the coloring invalid
    """
    k = drawing.k if k is None else k
    require_valid(drawing, coloring)
    return {
        color: max(
            len(face)
            for face in outerplane_faces(drawing.n, color_class_chords(drawing, coloring, color))
        )
        for color in range(1, k + 1)
    }


@dataclass(frozen=True)
class BoundsTable:
    """Closed-form edge-count bounds for given n and k.

    A field is None where its precondition on n and k fails.

    Attributes:
        max_convex: n + k(n - 3), edges of any convex drawing
        precolored_min_upper: floor((k + 4)(n - 2) / 2), n >= 5, 2 <= k <= n/2
        precolored_min_lower: ceil(k(n - 2k + 1) / (2k - 3)) + n, k >= 2, n >= 2k - 1
        k3_precolored_lower: ceil(5n/2) - 6, k = 3
        k3_free_lower: ceil(7n/2) - 8, k = 3
        theta2_lower: 3n - 6, k = 2 (also for non-convex drawings)
    """

    n: int
    k: int
    max_convex: int
    precolored_min_upper: int | None
    precolored_min_lower: int | None
    k3_precolored_lower: int | None
    k3_free_lower: int | None
    theta2_lower: int | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "max_convex": self.max_convex,
            "precolored_min_upper": self.precolored_min_upper,
            "precolored_min_lower": self.precolored_min_lower,
            "k3_precolored_lower": self.k3_precolored_lower,
            "k3_free_lower": self.k3_free_lower,
            "theta2_lower": self.theta2_lower,
        }

    def lower_bound_for(self, convex: bool, free: bool) -> tuple[str, int] | None:
        """Name and value of the lower bound that applies to a saturated drawing.

        Args:
            convex: Whether the drawing is in convex position
            free: Whether saturation is in the free setting
        """
        if self.theta2_lower is not None:
            return "3n - 6", self.theta2_lower
        if not convex:
            return None
        if free and self.k3_free_lower is not None:
            return "ceil(7n/2) - 8", self.k3_free_lower
        if self.k3_precolored_lower is not None:
            return "ceil(5n/2) - 6", self.k3_precolored_lower
        if self.precolored_min_lower is not None:
            return "ceil(k(n - 2k + 1) / (2k - 3)) + n", self.precolored_min_lower
        return None


def bounds(n: int, k: int) -> BoundsTable:
    """Evaluate the edge-count bounds exactly.

    Raises:
        ThicksatError: If n < 3 or k < 1
    """
    if n < 3 or k < 1:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Bounds need n >= 3 and k >= 1, got n = {n}, k = {k}",
            {"n": n, "k": k},
        )
    min_upper = None
    if n >= 5 and 2 <= k and 2 * k <= n:
        min_upper = (k + 4) * (n - 2) // 2
    min_lower = None
    if k >= 2 and n >= 2 * k - 1:
        min_lower = math.ceil(Fraction(k * (n - 2 * k + 1), 2 * k - 3)) + n
    return BoundsTable(
        n=n,
        k=k,
        max_convex=n + k * (n - 3),
        precolored_min_upper=min_upper,
        precolored_min_lower=min_lower,
        k3_precolored_lower=math.ceil(Fraction(5 * n, 2)) - 6 if k == 3 else None,
        k3_free_lower=math.ceil(Fraction(7 * n, 2)) - 8 if k == 3 else None,
        theta2_lower=3 * n - 6 if k == 2 else None,
    )
