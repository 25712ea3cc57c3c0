"""Pytest fixtures for thicksat tests."""

import random
from collections.abc import Callable
from typing import Any

import pytest

from thicksat.convex import regular_polygon
from thicksat.document import to_dict
from thicksat.drawing import Coloring, Drawing, Edge
from thicksat.geom import Point, general_position, segments_cross
from thicksat.saturation import BLUE, RED


@pytest.fixture
def square() -> Drawing:
    """Four points in convex position, no edges, k = 2."""
    return Drawing.create([Point.of(0, 0), Point.of(2, 0), Point.of(2, 2), Point.of(0, 2)], k=2)


@pytest.fixture
def square_with_diagonal(square: Drawing) -> tuple[Drawing, Coloring]:
    """The square with its outer cycle and the diagonal (0, 2), all blue."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
    drawing = square.with_edges(edges)
    return drawing, Coloring.monochrome(drawing, BLUE)


@pytest.fixture
def triangle_with_center() -> tuple[Drawing, Coloring]:
    """A triangle with one interior point joined to a corner by a red edge."""
    drawing = Drawing.create(
        [Point.of(0, 0), Point.of(4, 0), Point.of(0, 4), Point.of(1, 1)],
        [(0, 1), (1, 2), (0, 2), (0, 3)],
        k=2,
    )
    coloring = Coloring.from_pairs(
        [((0, 1), BLUE), ((1, 2), BLUE), ((0, 2), BLUE), ((0, 3), RED)]
    )
    return drawing, coloring


@pytest.fixture
def parallel_chords_17() -> tuple[Drawing, Coloring]:
    """A 17-gon with a blue outer cycle and seven parallel red chords.

    The chords (i, 17 - i) split the polygon into one triangle and seven
    quadrilaterals.
    """
    n = 17
    hull = [(i, (i + 1) % n) for i in range(n)]
    chords = [(i, n - i) for i in range(1, 8)]
    drawing = Drawing.create(regular_polygon(n), hull + chords, k=2)
    coloring = Coloring.from_pairs([(e, BLUE) for e in hull] + [(e, RED) for e in chords])
    return drawing, coloring


@pytest.fixture
def document_of() -> Callable[[Drawing, Coloring | None], dict[str, Any]]:
    """Serialize a drawing into a document dictionary."""

    def _document(drawing: Drawing, coloring: Coloring | None = None) -> dict[str, Any]:
        return to_dict(drawing, coloring)

    return _document


def _random_points(rng: random.Random, n: int, size: int) -> list[Point]:
    while True:
        coords = rng.sample([(x, y) for x in range(size) for y in range(size)], n)
        points = [Point.of(x, y) for x, y in coords]
        if general_position(points):
            return points


@pytest.fixture
def random_theta2_instance() -> Callable[..., tuple[Drawing, Coloring]]:
    """Seeded random point set with a random valid blue/red drawing on it.

    Each vertex pair is tried with probability ``density``.
    """

    def _instance(seed: int, n: int, density: float = 0.4) -> tuple[Drawing, Coloring]:
        rng = random.Random(seed)
        points = _random_points(rng, n, 24)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        colors: dict[Edge, int] = {}
        blank = Drawing.create(points, k=2)
        for uv in pairs:
            if rng.random() > density:
                continue
            segment = blank.segment(uv)
            for color in rng.sample([BLUE, RED], 2):
                if not any(
                    c == color and segments_cross(segment, blank.segment(e))
                    for e, c in colors.items()
                ):
                    colors[uv] = color
                    break
        return Drawing.create(points, colors, k=2), Coloring(colors)

    return _instance


@pytest.fixture
def random_points() -> Callable[[random.Random, int], list[Point]]:
    """Random points in general position on a small integer grid."""

    def _points(rng: random.Random, n: int) -> list[Point]:
        return _random_points(rng, n, 16)

    return _points
