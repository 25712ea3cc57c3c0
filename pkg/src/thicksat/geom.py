"""Exact geometric primitives.

Every predicate in this module works on ``fractions.Fraction`` coordinates, so
no decision ever depends on floating-point rounding.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from itertools import combinations

from thicksat.errors import ERROR_INVALID_PARAMETERS, ThicksatError

Rational = Fraction


@dataclass(frozen=True, order=True)
class Point:
    """A point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: int | str | Fraction, y: int | str | Fraction) -> "Point":
        """Build a point from integers, ``"p/q"`` strings or fractions."""
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, t: Fraction) -> "Point":
        return Point(self.x * t, self.y * t)


@dataclass(frozen=True)
class Segment:
    """A closed segment between two distinct points."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ThicksatError(
                ERROR_INVALID_PARAMETERS,
                "Segment endpoints must differ",
                {"point": [str(self.a.x), str(self.a.y)]},
            )

    def at(self, t: Fraction) -> Point:
        """Point at parameter t, with t = 0 at ``a`` and t = 1 at ``b``."""
        return self.a + (self.b - self.a).scaled(t)


class Orientation(IntEnum):
    """Turn direction of an ordered point triple."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of (a - o) and (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Return the orientation of the triple (p, q, r)."""
    value = cross(p, q, r)
    if value > 0:
        return Orientation.COUNTERCLOCKWISE
    if value < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _collinear_overlap(s1: Segment, s2: Segment) -> bool:
    # project onto x unless the common line is vertical
    if s1.a.x != s1.b.x:
        lo1, hi1 = sorted((s1.a.x, s1.b.x))
        lo2, hi2 = sorted((s2.a.x, s2.b.x))
    else:
        lo1, hi1 = sorted((s1.a.y, s1.b.y))
        lo2, hi2 = sorted((s2.a.y, s2.b.y))
    return max(lo1, lo2) < min(hi1, hi2)


def segments_cross(s1: Segment, s2: Segment) -> bool:
    """Return True iff some point lies in the interior of both segments.

    Contact at an endpoint of either segment is not a crossing. Collinear
    segments whose interiors overlap do cross.
    """
    o1 = orientation(s1.a, s1.b, s2.a)
    o2 = orientation(s1.a, s1.b, s2.b)
    o3 = orientation(s2.a, s2.b, s1.a)
    o4 = orientation(s2.a, s2.b, s1.b)

    if o1 == o2 == Orientation.COLLINEAR:
        return _collinear_overlap(s1, s2)
    if Orientation.COLLINEAR in (o1, o2, o3, o4):
        # the unique common point is an endpoint of one of the segments
        return False
    return o1 != o2 and o3 != o4


def point_in_open_segment(p: Point, s: Segment) -> bool:
    """Return True iff p lies on s but is neither of its endpoints."""
    if p in (s.a, s.b) or orientation(s.a, s.b, p) != Orientation.COLLINEAR:
        return False
    return min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x) and min(s.a.y, s.b.y) <= p.y <= max(
        s.a.y, s.b.y
    )


def line_intersection(
    origin: Point, direction: Point, s: Segment
) -> tuple[Fraction, Fraction] | None:
    """Intersect the line origin + t * direction with the line through s.

    Returns:
        ``(t, u)`` where the intersection is ``origin + t * direction`` and
        ``s.at(u)``, or None for parallel lines
    """
    edge = s.b - s.a
    denom = direction.x * edge.y - direction.y * edge.x
    if denom == 0:
        return None
    diff = s.a - origin
    t = (diff.x * edge.y - diff.y * edge.x) / denom
    u = (diff.x * direction.y - diff.y * direction.x) / denom
    return t, u


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Return the hull vertices as indices in counterclockwise order.

    Uses the monotone chain algorithm. The sequence starts at the
    lexicographically smallest point; collinear boundary points are dropped.

    Args:
        points: At least three points in general position

    Returns:
        Indices of hull vertices, counterclockwise

    Raises:
        ThicksatError: If fewer than three points are given
    """
    if len(points) < 3:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"convex hull needs at least 3 points, got {len(points)}",
            {"provided": len(points)},
        )
    order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))

    def chain(indices: list[int]) -> list[int]:
        out: list[int] = []
        for i in indices:
            while len(out) >= 2 and cross(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(order[::-1])
    return lower[:-1] + upper[:-1]


def general_position(points: Sequence[Point]) -> bool:
    """Return True iff no three of the points are collinear."""
    return all(
        orientation(p, q, r) != Orientation.COLLINEAR for p, q, r in combinations(points, 3)
    )


def collinear_triples(points: Sequence[Point]) -> list[tuple[int, int, int]]:
    """Return every index triple whose points are collinear."""
    return [
        (i, j, k)
        for i, j, k in combinations(range(len(points)), 3)
        if orientation(points[i], points[j], points[k]) == Orientation.COLLINEAR
    ]


def signed_area2(polygon: Sequence[Point]) -> Fraction:
    """Twice the signed area of a polygon, positive when counterclockwise."""
    total = Fraction(0)
    for i, p in enumerate(polygon):
        q = polygon[(i + 1) % len(polygon)]
        total += p.x * q.y - q.x * p.y
    return total


def in_convex_position(points: Sequence[Point]) -> bool:
    """Return True iff every point is a vertex of the convex hull."""
    if len(points) < 3:
        return True
    return len(convex_hull(points)) == len(points)
