"""Tests for drawing tools."""

import pytest

from thicksat.errors import DocumentError, ThicksatError
from thicksat.tools.drawing import parse_mode, saturate_document, validate_drawing


class TestParseMode:
    """Tests for parse_mode."""

    def test_valid_modes(self):
        """Test both mode names."""
        assert parse_mode("free").value == "free"
        assert parse_mode("precolored").value == "precolored"

    def test_invalid_mode(self):
        """Test an unknown mode name."""
        with pytest.raises(ThicksatError) as exc_info:
            parse_mode("relaxed")

        assert exc_info.value.code == "INVALID_PARAMETERS"
        assert exc_info.value.details["valid_options"] == ["precolored", "free"]


class TestValidateDrawing:
    """Tests for validate_drawing tool."""

    @pytest.mark.asyncio
    async def test_valid_document(self, square_with_diagonal, document_of):
        """Test a colored plane drawing."""
        result = await validate_drawing(document=document_of(*square_with_diagonal))

        assert result["success"] is True
        assert result["valid"] is True
        assert result["defects"] == []
        assert "coloring" not in result

    @pytest.mark.asyncio
    async def test_monochromatic_crossing(self, square, document_of):
        """Test two crossing diagonals in one color."""
        drawing = square.with_edges([(0, 2), (1, 3)])
        document = document_of(drawing)
        document["edges"] = [[0, 2, 1], [1, 3, 1]]

        result = await validate_drawing(document=document)

        assert result["valid"] is False
        assert result["defects"][0]["kind"] == "monochromatic_crossing"

    @pytest.mark.asyncio
    async def test_uncolored_gets_coloring(self, square, document_of):
        """Test that a certifying coloring is returned."""
        result = await validate_drawing(document=document_of(square.with_edges([(0, 2), (1, 3)])))

        assert result["valid"] is True
        assert sorted(row[2] for row in result["coloring"]) == [1, 2]

    @pytest.mark.asyncio
    async def test_k_override(self, square, document_of):
        """Test that one color cannot certify crossing diagonals."""
        document = document_of(square.with_edges([(0, 2), (1, 3)]))

        result = await validate_drawing(document=document, k=1)

        assert result["valid"] is False
        assert result["k"] == 1
        assert "no 1-coloring" in result["reason"]

    @pytest.mark.asyncio
    async def test_malformed_document(self):
        """Test that a bad document raises a parse error."""
        with pytest.raises(DocumentError):
            await validate_drawing(document={"version": "1", "k": 2, "vertices": [[0]]})


class TestSaturateDocument:
    """Tests for saturate_document tool."""

    @pytest.mark.asyncio
    async def test_saturate_square(self, square, document_of):
        """Test saturating an empty square."""
        result = await saturate_document(document=document_of(square), mode="free")

        assert result["success"] is True
        assert result["edges_before"] == 0
        assert result["edges_after"] == 6
        assert result["already_saturated"] is False
        assert result["lower_bound"] == {"name": "3n - 6", "value": 6}
        assert len(result["document"]["edges"][0]) == 3

    @pytest.mark.asyncio
    async def test_already_saturated(self, triangle_with_center, document_of):
        """Test a drawing that gains no edge."""
        drawing, coloring = triangle_with_center
        full = drawing.with_edges([(1, 3), (2, 3)])
        document = document_of(full, coloring.with_color((1, 3), 1).with_color((2, 3), 1))

        result = await saturate_document(document=document)

        assert result["already_saturated"] is True
        assert result["edges_after"] == 6

    @pytest.mark.asyncio
    async def test_invalid_mode(self, square, document_of):
        """Test an unknown mode."""
        with pytest.raises(ThicksatError):
            await saturate_document(document=document_of(square), mode="relaxed")
