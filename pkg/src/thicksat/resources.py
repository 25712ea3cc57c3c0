"""MCP Resources for thicksat.

This module provides read-only resources for closed-form bounds and zigzag
constructions.
"""

from typing import Any

from thicksat.convex import bounds, build_zigzag
from thicksat.document import to_dict


async def get_bounds_resource(n: int, k: int) -> dict[str, Any]:
    """Get the bounds table for n and k.

    Resource URI: thicksat://bounds/{n}/{k}

    Returns:
        Dictionary with every bound; inapplicable bounds are null
    """
    return bounds(n, k).to_dict()


async def get_zigzag_resource(n: int, k: int) -> dict[str, Any]:
    """Get the zigzag drawing for n and k as a document.

    Resource URI: thicksat://zigzag/{n}/{k}

    Returns:
        Dictionary with the document and its edge count
    """
    drawing, coloring = build_zigzag(n, k)
    return {
        "n": n,
        "k": k,
        "edge_count": len(drawing.edges),
        "document": to_dict(drawing, coloring),
    }
