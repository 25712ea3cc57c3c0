"""Construction tools: closed-form bounds and zigzag drawings."""

import asyncio
from typing import Any

from thicksat.convex import bounds, build_zigzag
from thicksat.document import to_dict


async def bounds_table(n: int, k: int) -> dict[str, Any]:
    """Evaluate every closed-form edge bound for n and k.

    Args:
        n: Number of vertices
        k: Number of colors

    Returns:
        Result dictionary with the bounds; inapplicable bounds are null
    """
    return {"success": True, "bounds": bounds(n, k).to_dict()}


async def build_zigzag_document(n: int, k: int) -> dict[str, Any]:
    """Build the precolored zigzag drawing as a document.

    Args:
        n: Number of vertices, at least 5
        k: Number of colors, 2 <= k <= n/2

    Returns:
        Result dictionary with the document and its edge count
    """
    drawing, coloring = await asyncio.to_thread(build_zigzag, n, k)
    return {
        "success": True,
        "n": n,
        "k": k,
        "edge_count": len(drawing.edges),
        "document": to_dict(drawing, coloring),
    }
