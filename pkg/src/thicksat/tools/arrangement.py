"""Arrangement tools: edge extensions and cell checks for two-colored drawings."""

import asyncio
from typing import Any

from thicksat.document import from_dict
from thicksat.errors import ERROR_INVALID_PARAMETERS, ThicksatError
from thicksat.extension import extend_edges
from thicksat.extension import extension_report as build_extension_report


async def extension_report(document: dict[str, Any]) -> dict[str, Any]:
    """Extend the red edges of a document and check the cell decomposition.

    Args:
        document: Drawing document with k = 2 and every edge colored 1 or 2

    Returns:
        Result dictionary with cell count, cell sizes, structural checks and the
        number of red cell diagonals
    """
    drawing, coloring = from_dict(document)
    if coloring is None:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            "Extensions need a fully colored document",
            {"edges": len(drawing.edges)},
        )
    arr = await asyncio.to_thread(extend_edges, drawing, coloring)
    report = await asyncio.to_thread(build_extension_report, arr)
    return {"success": True, **report.to_dict()}
