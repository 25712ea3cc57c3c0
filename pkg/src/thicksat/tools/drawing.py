"""Drawing tools: validation and saturation of documents.

This module provides MCP tools that take drawing documents as JSON objects.
"""

import asyncio
from typing import Any

from thicksat.convex import bounds
from thicksat.document import from_dict, to_dict
from thicksat.drawing import is_convex, validate
from thicksat.errors import ERROR_INVALID_PARAMETERS, ThicksatError
from thicksat.extension import saturate_drawing
from thicksat.saturation import SaturationMode, SearchBudget, k_colorable


def parse_mode(mode: str) -> SaturationMode:
    """Return the saturation mode named by a string.

    Raises:
        ThicksatError: If the name is not precolored or free
    """
    try:
        return SaturationMode(mode)
    except ValueError:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Invalid mode '{mode}'. Must be: precolored or free",
            {"provided": mode, "valid_options": [m.value for m in SaturationMode]},
        ) from None


async def validate_drawing(document: dict[str, Any], k: int | None = None) -> dict[str, Any]:
    """Check whether a document certifies thickness k.

    An uncolored document is valid if some k-coloring certifies it; the
    coloring found is returned.

    Args:
        document: Drawing document
        k: Overrides the document's k

    Returns:
        Result dictionary with validity and defects
    """
    drawing, coloring = from_dict(document)
    if k is not None:
        drawing = drawing.with_k(k)

    found = None
    if coloring is None:
        found = await asyncio.to_thread(k_colorable, drawing)
        if found is None:
            return {
                "success": True,
                "valid": False,
                "k": drawing.k,
                "defects": [],
                "reason": f"no {drawing.k}-coloring without monochromatic crossings exists",
            }
        coloring = found

    report = validate(drawing, coloring)
    result: dict[str, Any] = {"success": True, "k": drawing.k, **report.to_dict()}
    if found is not None:
        result["coloring"] = to_dict(drawing, found)["edges"]
    return result


async def saturate_document(
    document: dict[str, Any],
    mode: str = "precolored",
    budget: int | None = None,
) -> dict[str, Any]:
    """Saturate a drawing document.

    Args:
        document: Drawing document
        mode: precolored or free
        budget: Node limit for free-mode searches

    Returns:
        Result dictionary with the saturated document and edge counts
    """
    saturation_mode = parse_mode(mode)
    drawing, coloring = from_dict(document)
    search_budget = SearchBudget(budget) if budget else None
    result, result_coloring = await asyncio.to_thread(
        saturate_drawing, drawing, coloring, saturation_mode, search_budget
    )

    bound = None
    if drawing.n >= 3:
        found = bounds(drawing.n, drawing.k).lower_bound_for(
            is_convex(drawing), saturation_mode is SaturationMode.FREE
        )
        if found is not None:
            bound = {"name": found[0], "value": found[1]}

    return {
        "success": True,
        "mode": saturation_mode.value,
        "edges_before": len(drawing.edges),
        "edges_after": len(result.edges),
        "already_saturated": len(drawing.edges) == len(result.edges),
        "lower_bound": bound,
        "document": to_dict(result, result_coloring),
    }
