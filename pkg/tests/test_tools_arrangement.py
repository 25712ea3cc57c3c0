"""Tests for arrangement tools."""

import pytest

from thicksat.errors import ThicksatError
from thicksat.tools.arrangement import extension_report


class TestExtensionReport:
    """Tests for extension_report tool."""

    @pytest.mark.asyncio
    async def test_parallel_chords(self, parallel_chords_17, document_of):
        """Test the report for the 17-gon with parallel red chords."""
        result = await extension_report(document=document_of(*parallel_chords_17))

        assert result["success"] is True
        assert result["red_edges"] == 7
        assert result["cell_count"] == 8
        assert result["cell_count_ok"] is True
        assert result["identity"]["lhs"] == 14

    @pytest.mark.asyncio
    async def test_interior_point(self, triangle_with_center, document_of):
        """Test a drawing with an interior vertex."""
        result = await extension_report(document=document_of(*triangle_with_center))

        assert result["cell_sizes"] == [3, 3]
        assert result["interior_vertices_ok"] is True

    @pytest.mark.asyncio
    async def test_uncolored_document(self, square_with_diagonal, document_of):
        """Test that an uncolored document is refused."""
        drawing, _ = square_with_diagonal
        with pytest.raises(ThicksatError) as exc_info:
            await extension_report(document=document_of(drawing))

        assert exc_info.value.code == "INVALID_PARAMETERS"
