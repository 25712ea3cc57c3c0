"""Tests for convex constructions and closed-form bounds."""

import random

import pytest

from thicksat.convex import (
    NiceMatching,
    Side,
    bounds,
    build_zigzag,
    canonical_nice_matching,
    check_face_sizes,
    color_class_chords,
    inner_angulation_inner_edges,
    is_nice_matching,
    outerplane_faces,
    regular_polygon,
    tilt,
    zigzag_matchings,
)
from thicksat.drawing import Coloring, Drawing, validate
from thicksat.errors import (
    ERROR_INVALID_MATCHING,
    ERROR_INVALID_PARAMETERS,
    ERROR_NON_CONVEX,
    ThicksatError,
)
from thicksat.geom import convex_hull, general_position
from thicksat.saturation import greedy_saturate, is_saturated

# Edge counts of the zigzag for 5 <= n <= 12 and 2 <= k <= n/2
ZIGZAG_EDGES = {
    (5, 2): 9,
    (6, 2): 12,
    (6, 3): 14,
    (7, 2): 15,
    (7, 3): 17,
    (8, 2): 18,
    (8, 3): 21,
    (8, 4): 23,
    (9, 2): 21,
    (9, 3): 24,
    (9, 4): 27,
    (10, 2): 24,
    (10, 3): 28,
    (10, 4): 31,
    (10, 5): 35,
    (11, 2): 27,
    (11, 3): 31,
    (11, 4): 35,
    (11, 5): 39,
    (12, 2): 30,
    (12, 3): 35,
    (12, 4): 39,
    (12, 5): 44,
    (12, 6): 48,
}


class TestInnerAngulation:
    """Tests for inner_angulation_inner_edges."""

    def test_triangulation(self):
        """Test that a hexagon triangulation has three inner edges."""
        count = inner_angulation_inner_edges(6, 3)
        assert count.inner_edges == 3
        assert count.exact

    def test_quadrangulation(self):
        """Test an octagon quadrangulation."""
        assert inner_angulation_inner_edges(8, 4).inner_edges == 2

    def test_inexact(self):
        """Test that a fractional count is floored and flagged."""
        count = inner_angulation_inner_edges(7, 4)
        assert count.inner_edges == 1
        assert not count.exact

    def test_polygon_itself(self):
        """Test n = l."""
        assert inner_angulation_inner_edges(5, 5).inner_edges == 0

    def test_invalid(self):
        """Test l < 3."""
        with pytest.raises(ThicksatError) as exc_info:
            inner_angulation_inner_edges(6, 2)
        assert exc_info.value.code == ERROR_INVALID_PARAMETERS


class TestRegularPolygon:
    """Tests for regular_polygon."""

    @pytest.mark.parametrize("n", [3, 4, 7, 12, 17])
    def test_convex_general_position(self, n):
        """Test that points are in convex and general position, counterclockwise."""
        points = regular_polygon(n)
        assert len(points) == n
        assert general_position(points)
        hull = convex_hull(points)
        start = hull.index(0)
        assert hull[start:] + hull[:start] == list(range(n))

    def test_exactly_on_circle(self):
        """Test that every point satisfies x^2 + y^2 = 1 exactly."""
        assert all(p.x * p.x + p.y * p.y == 1 for p in regular_polygon(9))

    def test_too_small(self):
        """Test n < 3."""
        with pytest.raises(ThicksatError):
            regular_polygon(2)


class TestOuterplaneFaces:
    """Tests for outerplane_faces and interleaving."""

    def test_fan_faces(self):
        """Test that chords sharing an endpoint do not block a face split."""
        faces = outerplane_faces(6, [(0, 2), (0, 3), (0, 4)])
        assert len(faces) == 4
        assert all(len(face) == 3 for face in faces)

    def test_faces(self):
        """Test the faces of the hexagon with two parallel chords."""
        faces = outerplane_faces(6, [(1, 5), (2, 4)])
        assert [sorted(f) for f in faces] == [[0, 1, 5], [1, 2, 4, 5], [2, 3, 4]]

    def test_no_chords(self):
        """Test that the polygon itself is the only face."""
        assert outerplane_faces(5, []) == [(0, 1, 2, 3, 4)]

    def test_crossing_chords(self):
        """Test that crossing chords are refused."""
        with pytest.raises(ThicksatError) as exc_info:
            outerplane_faces(6, [(0, 3), (1, 4)])
        assert exc_info.value.code == ERROR_INVALID_MATCHING

    def test_hull_side_is_not_a_chord(self):
        """Test that outer-cycle edges are refused as chords."""
        with pytest.raises(ThicksatError) as exc_info:
            outerplane_faces(6, [(5, 0)])
        assert exc_info.value.details["chord"] == [0, 5]


class TestNiceMatching:
    """Tests for nice matchings."""

    def test_canonical_even(self):
        """Test the canonical matching of a hexagon."""
        m = canonical_nice_matching(6)
        assert m.chords == ((1, 5), (2, 4))
        assert m.offset == 0

    def test_canonical_odd(self):
        """Test that odd n gives floor((n - 2) / 2) chords."""
        m = canonical_nice_matching(7)
        assert m.chord_set == frozenset({(1, 6), (2, 5)})
        assert is_nice_matching(7, m.chords)

    def test_canonical_too_small(self):
        """Test n < 4."""
        with pytest.raises(ThicksatError):
            canonical_nice_matching(3)

    def test_is_nice_matching(self):
        """Test the dual-path and face-size conditions."""
        assert is_nice_matching(6, [(0, 3)])
        assert is_nice_matching(4, [])
        assert not is_nice_matching(5, [])
        assert not is_nice_matching(8, [(0, 4)])
        assert not is_nice_matching(6, [(0, 2), (2, 4), (0, 4)])
        assert not is_nice_matching(6, [(0, 3), (1, 4)])

    def test_left_tilt(self):
        """Test the left tilt of the hexagon's canonical matching."""
        tilted = tilt(canonical_nice_matching(6), Side.LEFT)
        assert tilted.chord_set == frozenset({(1, 4)})
        assert tilted.offset == 5

    @pytest.mark.parametrize("n", range(4, 13))
    def test_tilts_are_inverse(self, n):
        """Test that right undoes left and left undoes right."""
        m = canonical_nice_matching(n)
        assert tilt(tilt(m, Side.LEFT), Side.RIGHT).chord_set == m.chord_set
        assert tilt(tilt(m, Side.RIGHT), Side.LEFT).chord_set == m.chord_set

    @pytest.mark.parametrize("n", range(5, 13))
    def test_tilts_are_parallel_classes(self, n):
        """Test that tilting shifts the common index sum by one."""
        left = tilt(canonical_nice_matching(n), Side.LEFT)
        assert {(u + v) % n for u, v in left.chords} == {n - 1}
        assert is_nice_matching(n, left.chords)

    def test_zigzag_offsets(self):
        """Test the offsets of the matching sequence."""
        assert [m.offset for m in zigzag_matchings(8, 3)] == [7, 0, 1]

    def test_chordless_face_needs_offset(self):
        """Test that an empty matching without offset cannot be tilted."""
        with pytest.raises(ThicksatError) as exc_info:
            tilt(NiceMatching.create(4, []), Side.LEFT)
        assert exc_info.value.code == ERROR_INVALID_MATCHING


class TestZigzag:
    """Tests for build_zigzag."""

    @pytest.mark.parametrize(
        ("n", "k", "edges"), [(n, k, edges) for (n, k), edges in sorted(ZIGZAG_EDGES.items())]
    )
    def test_edge_count(self, n, k, edges):
        """Test zigzag edge counts against floor((k + 4)(n - 2) / 2)."""
        drawing, _ = build_zigzag(n, k)
        assert len(drawing.edges) == edges <= bounds(n, k).precolored_min_upper
        if k <= 3:
            assert edges == bounds(n, k).precolored_min_upper

    @pytest.mark.parametrize(("n", "k"), sorted(ZIGZAG_EDGES))
    def test_valid_and_precolored_saturated(self, n, k):
        """Test that the zigzag validates and no missing edge can be added with the colors fixed."""
        drawing, coloring = build_zigzag(n, k)
        assert validate(drawing, coloring).ok
        assert is_saturated(drawing, coloring)

    def test_outer_cycle_first_color(self):
        """Test that every outer-cycle edge has color 1."""
        drawing, coloring = build_zigzag(8, 3)
        hull = convex_hull(drawing.vertices)
        for i in range(8):
            u, v = sorted((hull[i], hull[(i + 1) % 8]))
            assert coloring[(u, v)] == 1

    def test_face_sizes(self):
        """Test the largest face of each color class."""
        drawing, coloring = build_zigzag(8, 3)
        assert check_face_sizes(drawing, coloring) == {1: 3, 2: 4, 3: 3}

    def test_middle_class_is_canonical(self):
        """Test that color 2 of a k = 3 zigzag is a parallel class."""
        drawing, coloring = build_zigzag(8, 3)
        assert len(color_class_chords(drawing, coloring, 2)) == 3

    def test_too_few_vertices(self):
        """Test n < 5."""
        with pytest.raises(ThicksatError):
            build_zigzag(4, 2)

    def test_k_above_half(self):
        """Test that k > n/2 cites the condition."""
        with pytest.raises(ThicksatError) as exc_info:
            build_zigzag(6, 4)
        assert exc_info.value.details["condition"] == "k <= n/2"

    def test_single_color(self):
        """Test k = 1."""
        with pytest.raises(ThicksatError):
            build_zigzag(6, 1)


class TestFaceSizes:
    """Tests for check_face_sizes."""

    def test_non_convex(self, triangle_with_center):
        """Test that non-convex drawings are refused."""
        drawing, coloring = triangle_with_center
        with pytest.raises(ThicksatError) as exc_info:
            check_face_sizes(drawing, coloring)
        assert exc_info.value.code == ERROR_NON_CONVEX

    @pytest.mark.parametrize("seed", range(20))
    def test_saturated_faces_are_small(self, seed):
        """Test face sizes of random precolored-saturated convex drawings.

        Every inner face of a color class together with the outer cycle has
        at most 2k - 1 vertices, and at most 4 for k = 3.
        """
        rng = random.Random(seed)
        n = rng.randint(5, 9)
        k = rng.randint(2, 4)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        empty = Drawing.create(regular_polygon(n), k=k)
        drawing, coloring = greedy_saturate(empty, Coloring(), candidate_order=pairs)
        sizes = check_face_sizes(drawing, coloring)
        limit = 4 if k == 3 else 2 * k - 1
        assert max(sizes.values()) <= limit


class TestBounds:
    """Tests for bounds."""

    def test_theta2_coincide(self):
        """Test that all bounds agree for k = 2."""
        table = bounds(6, 2)
        assert table.max_convex == 12
        assert table.precolored_min_upper == 12
        assert table.precolored_min_lower == 12
        assert table.theta2_lower == 12
        assert table.k3_free_lower is None

    def test_k3(self):
        """Test the k = 3 bounds for n = 8."""
        table = bounds(8, 3)
        assert table.max_convex == 23
        assert table.precolored_min_upper == 21
        assert table.precolored_min_lower == 11
        assert table.k3_precolored_lower == 14
        assert table.k3_free_lower == 20

    def test_preconditions(self):
        """Test that inapplicable bounds are None."""
        table = bounds(5, 3)
        assert table.precolored_min_upper is None
        assert table.precolored_min_lower == 5
        assert table.k3_free_lower == 10
        assert bounds(4, 3).precolored_min_lower is None

    def test_invalid(self):
        """Test n < 3."""
        with pytest.raises(ThicksatError):
            bounds(2, 1)

    def test_to_dict(self):
        """Test serialization keys."""
        assert set(bounds(6, 2).to_dict()) == {
            "n",
            "k",
            "max_convex",
            "precolored_min_upper",
            "precolored_min_lower",
            "k3_precolored_lower",
            "k3_free_lower",
            "theta2_lower",
        }

    def test_lower_bound_for(self):
        """Test which lower bound applies to a saturated drawing."""
        assert bounds(6, 2).lower_bound_for(convex=False, free=True) == ("3n - 6", 12)
        assert bounds(8, 3).lower_bound_for(convex=True, free=True) == ("ceil(7n/2) - 8", 20)
        assert bounds(8, 3).lower_bound_for(convex=True, free=False) == ("ceil(5n/2) - 6", 14)
        assert bounds(8, 3).lower_bound_for(convex=False, free=False) is None
        name, value = bounds(9, 4).lower_bound_for(convex=True, free=False)
        assert value == 11
        assert name.startswith("ceil(k(n - 2k + 1)")
