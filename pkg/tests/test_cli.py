"""Tests for the command line."""

import pytest

from thicksat.cli import main
from thicksat.config import CAP_ENV_VAR
from thicksat.convex import regular_polygon
from thicksat.document import load_document, save_document
from thicksat.drawing import Coloring, Drawing, validate
from thicksat.saturation import BLUE, RED


@pytest.fixture
def saved(tmp_path):
    """Save a drawing and coloring as a document and return its path."""

    def _save(drawing, coloring=None, name="drawing.json"):
        return str(save_document(tmp_path / name, drawing, coloring))

    return _save


class TestBounds:
    """Tests for the bounds command."""

    def test_prints_table(self, capsys):
        """Test the k = 2 hexagon table."""
        assert main(["bounds", "--n", "6", "--k", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert ["max_convex", "12"] in [line.split() for line in lines]
        assert ["k3_free_lower", "-"] in [line.split() for line in lines]


class TestZigzag:
    """Tests for the zigzag command."""

    def test_writes_document(self, tmp_path, capsys):
        """Test that the written zigzag loads and validates."""
        out = tmp_path / "zigzag.json"
        svg = tmp_path / "zigzag.svg"
        assert main(["zigzag", "--n", "8", "--k", "3", "--out", str(out), "--svg", str(svg)]) == 0
        assert "21 edges" in capsys.readouterr().out
        drawing, coloring = load_document(out)
        assert len(drawing.edges) == 21
        assert coloring is not None
        assert validate(drawing, coloring).ok
        assert svg.read_text(encoding="utf-8").startswith("<svg")

    def test_refused_parameters(self, tmp_path, capsys):
        """Test k > n/2."""
        assert main(["zigzag", "--n", "6", "--k", "4", "--out", str(tmp_path / "z.json")]) == 1
        assert "INVALID_PARAMETERS" in capsys.readouterr().err


class TestValidate:
    """Tests for the validate command."""

    def test_valid(self, saved, square_with_diagonal, capsys):
        """Test a valid colored document."""
        path = saved(*square_with_diagonal)
        assert main(["validate", path]) == 0
        assert "valid: n=4 edges=5 k=2" in capsys.readouterr().out

    def test_invalid(self, saved, square_with_diagonal, capsys):
        """Test a color out of range."""
        drawing, coloring = square_with_diagonal
        path = saved(drawing, coloring.with_color((0, 2), 5))
        assert main(["validate", path]) == 1
        assert "color_out_of_range" in capsys.readouterr().out.lower()

    def test_uncolored_certified(self, saved, square, capsys):
        """Test that an uncolored document gets a certifying coloring."""
        path = saved(square.with_edges([(0, 2), (1, 3)]))
        assert main(["validate", path]) == 0
        assert "certifying 2-coloring" in capsys.readouterr().out

    def test_uncolored_not_colorable(self, saved, square, capsys):
        """Test crossing diagonals with k overridden to 1."""
        path = saved(square.with_edges([(0, 2), (1, 3)]))
        assert main(["validate", path, "--k", "1"]) == 1
        assert "no 1-coloring" in capsys.readouterr().out

    def test_parse_error(self, tmp_path, capsys):
        """Test that malformed JSON exits with 2 and a position."""
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        assert main(["validate", str(path)]) == 2
        assert "line 1" in capsys.readouterr().err

    def test_field_error(self, tmp_path, capsys):
        """Test that content errors name the field."""
        path = tmp_path / "bad.json"
        path.write_text('{"version": "1", "k": 2, "vertices": [[0, 1.5]]}', encoding="utf-8")
        assert main(["validate", str(path)]) == 2
        assert "vertices[0][1]" in capsys.readouterr().err


class TestSaturate:
    """Tests for the saturate command."""

    def test_empty_square(self, saved, square, tmp_path, capsys):
        """Test saturating a square from scratch."""
        out = tmp_path / "saturated.json"
        assert main(["saturate", saved(square), "--mode", "precolored", "--out", str(out)]) == 0
        output = capsys.readouterr().out
        assert "edges: 0 -> 6" in output
        assert "at least 6 edges (3n - 6)" in output
        drawing, coloring = load_document(out)
        assert len(drawing.edges) == 6
        assert validate(drawing, coloring).ok

    def test_empty_hexagon(self, saved, tmp_path, capsys):
        """Test that a convex hexagon saturates to 3n - 6 edges."""
        out = tmp_path / "hexagon.json"
        path = saved(Drawing.create(regular_polygon(6), k=2))
        assert main(["saturate", path, "--mode", "free", "--out", str(out)]) == 0
        assert "edges: 0 -> 12 (free)" in capsys.readouterr().out
        drawing, _ = load_document(out)
        assert len(drawing.edges) == 12

    def test_already_saturated(self, tmp_path, capsys):
        """Test a zigzag, which is saturated already."""
        zigzag = tmp_path / "zigzag.json"
        main(["zigzag", "--n", "7", "--k", "2", "--out", str(zigzag)])
        out = tmp_path / "out.json"
        assert main(["saturate", str(zigzag), "--mode", "precolored", "--out", str(out)]) == 0
        assert "already saturated (precolored): 15 edges" in capsys.readouterr().out


class TestEnumerate:
    """Tests for the enumerate command."""

    def test_pentagon(self, tmp_path, capsys):
        """Test the table and the witness file."""
        witness = tmp_path / "witness.json"
        argv = ["enumerate", "--n", "5", "--k", "2", "--mode", "precolored"]
        assert main(argv + ["--witness-out", str(witness)]) == 0
        rows = [line.rsplit(None, 1) for line in capsys.readouterr().out.splitlines()]
        assert ["min edges", "9"] in rows
        drawing, coloring = load_document(witness)
        assert len(drawing.edges) == 9
        assert validate(drawing, coloring).ok

    def test_cap_exceeded(self, monkeypatch, capsys):
        """Test that the free cap refuses n = 10."""
        monkeypatch.delenv(CAP_ENV_VAR, raising=False)
        assert main(["enumerate", "--n", "10", "--k", "2", "--mode", "free"]) == 1
        assert "CAP_EXCEEDED" in capsys.readouterr().err

    def test_inconclusive(self, capsys):
        """Test that an exhausted budget exits with 3."""
        argv = ["enumerate", "--n", "5", "--k", "2", "--mode", "precolored", "--budget", "1"]
        assert main(argv) == 3
        assert "INCONCLUSIVE" in capsys.readouterr().err


class TestExtend:
    """Tests for the extend command."""

    def test_parallel_chords(self, saved, parallel_chords_17, tmp_path, capsys):
        """Test the report on the 17-gon with parallel red chords."""
        svg = tmp_path / "cells.svg"
        assert main(["extend", saved(*parallel_chords_17), "--out-svg", str(svg)]) == 0
        output = capsys.readouterr().out
        assert "cells: 8 (expected 8)" in output
        assert "counting identity: 14 = 14 ok" in output
        assert "red cell diagonals: 7 added of 7" in output
        assert svg.exists()

    def test_needs_two_colors(self, tmp_path, capsys):
        """Test that a k = 3 document is refused."""
        zigzag = tmp_path / "zigzag.json"
        main(["zigzag", "--n", "8", "--k", "3", "--out", str(zigzag)])
        assert main(["extend", str(zigzag), "--out-svg", str(tmp_path / "x.svg")]) == 1
        assert "k = 2" in capsys.readouterr().err

    def test_needs_coloring(self, saved, square_with_diagonal, tmp_path, capsys):
        """Test that an uncolored document is refused."""
        drawing, _ = square_with_diagonal
        assert main(["extend", saved(drawing), "--out-svg", str(tmp_path / "x.svg")]) == 1
        assert "coloring" in capsys.readouterr().err

    def test_square_with_red_diagonal(self, saved, square, tmp_path, capsys):
        """Test that one red diagonal splits a square into two cells."""
        drawing = square.with_edges([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
        coloring = Coloring.monochrome(drawing, BLUE).with_color((0, 2), RED)
        assert main(["extend", saved(drawing, coloring), "--out-svg", str(tmp_path / "x.svg")]) == 0
        output = capsys.readouterr().out
        assert "cells: 2 (expected 2)" in output
        assert "cell sizes: [3, 3]" in output
