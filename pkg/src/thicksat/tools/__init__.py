"""thicksat MCP tools."""

from thicksat.tools.arrangement import extension_report
from thicksat.tools.construct import bounds_table, build_zigzag_document
from thicksat.tools.drawing import saturate_document, validate_drawing
from thicksat.tools.search import enumerate_saturated_counts, verify_named_bound

__all__ = [
    # Drawings
    "validate_drawing",
    "saturate_document",
    # Constructions
    "bounds_table",
    "build_zigzag_document",
    # Search
    "enumerate_saturated_counts",
    "verify_named_bound",
    # Arrangements
    "extension_report",
]
