"""thicksat MCP Server implementation.

This module defines the FastMCP server with all tools and resources.
"""

import json
import logging
from typing import Annotated, Any

from fastmcp import FastMCP

from thicksat.errors import ThicksatError
from thicksat.resources import get_bounds_resource, get_zigzag_resource
from thicksat.tools.arrangement import extension_report
from thicksat.tools.construct import bounds_table, build_zigzag_document
from thicksat.tools.drawing import saturate_document, validate_drawing
from thicksat.tools.search import enumerate_saturated_counts, verify_named_bound

logger = logging.getLogger(__name__)

# Create the FastMCP server
mcp = FastMCP(
    "Geometric Thickness Saturation",
    instructions=(
        "Tools for straight-line drawings of bounded geometric thickness: validate "
        "colorings, saturate drawings, build zigzag constructions, enumerate small "
        "convex cases and check edge-count bounds"
    ),
)


def handle_error(e: Exception) -> dict[str, Any]:
    """Convert exception to error response dictionary.

    Args:
        e: The exception to handle

    Returns:
        Error response dictionary
    """
    if isinstance(e, ThicksatError):
        return e.to_dict()
    logger.exception("unexpected error in tool call")
    return {
        "success": False,
        "error": {
            "code": "UNKNOWN_ERROR",
            "message": str(e),
            "details": {},
        },
    }


# =============================================================================
# Drawing Tools
# =============================================================================


@mcp.tool()
async def tool_validate_drawing(
    document: Annotated[dict[str, Any], "Drawing document with version, k, vertices, edges"],
    k: Annotated[int | None, "Override the document's k"] = None,
) -> dict[str, Any]:
    """Check whether a drawing document certifies geometric thickness k."""
    try:
        return await validate_drawing(document=document, k=k)
    except Exception as e:
        return handle_error(e)


@mcp.tool()
async def tool_saturate_document(
    document: Annotated[dict[str, Any], "Drawing document with version, k, vertices, edges"],
    mode: Annotated[str, "Saturation setting: precolored or free"] = "precolored",
    budget: Annotated[int | None, "Node limit for free-mode searches"] = None,
) -> dict[str, Any]:
    """Add straight-line edges until no further edge fits with thickness k."""
    try:
        return await saturate_document(document=document, mode=mode, budget=budget)
    except Exception as e:
        return handle_error(e)


# =============================================================================
# Construction Tools
# =============================================================================


@mcp.tool()
async def tool_bounds_table(
    n: Annotated[int, "Number of vertices"],
    k: Annotated[int, "Number of colors"],
) -> dict[str, Any]:
    """Evaluate the closed-form edge bounds for n vertices and k colors."""
    try:
        return await bounds_table(n=n, k=k)
    except Exception as e:
        return handle_error(e)


@mcp.tool()
async def tool_build_zigzag(
    n: Annotated[int, "Number of vertices, at least 5"],
    k: Annotated[int, "Number of colors, 2 <= k <= n/2"],
) -> dict[str, Any]:
    """Build the precolored saturated zigzag drawing on a regular n-gon."""
    try:
        return await build_zigzag_document(n=n, k=k)
    except Exception as e:
        return handle_error(e)


# =============================================================================
# Search Tools
# =============================================================================


@mcp.tool()
async def tool_enumerate_saturated(
    n: Annotated[int, "Number of vertices"],
    k: Annotated[int, "Number of colors"],
    mode: Annotated[str, "Saturation setting: precolored or free"] = "precolored",
    cap: Annotated[int | None, "Largest admissible n"] = None,
) -> dict[str, Any]:
    """Enumerate all saturated convex drawings and report min and max edge counts."""
    try:
        return await enumerate_saturated_counts(n=n, k=k, mode=mode, cap=cap)
    except Exception as e:
        return handle_error(e)


@mcp.tool()
async def tool_verify_bound(
    n: Annotated[int, "Number of vertices"],
    k: Annotated[int, "Number of colors"],
    bound: Annotated[str, "Bound name, e.g. theta2_exact or k3_free_lower"],
) -> dict[str, Any]:
    """Check a named edge bound against exhaustive enumeration."""
    try:
        return await verify_named_bound(n=n, k=k, bound=bound)
    except Exception as e:
        return handle_error(e)


# =============================================================================
# Arrangement Tools
# =============================================================================


@mcp.tool()
async def tool_extension_report(
    document: Annotated[dict[str, Any], "Two-colored drawing document with k = 2"],
) -> dict[str, Any]:
    """Extend red edges, decompose the hull into cells and run the counting checks."""
    try:
        return await extension_report(document=document)
    except Exception as e:
        return handle_error(e)


# =============================================================================
# Resources
# =============================================================================


@mcp.resource("thicksat://bounds/{n}/{k}")
async def resource_bounds(n: int, k: int) -> str:
    """Closed-form edge bounds for n and k."""
    try:
        result = await get_bounds_resource(int(n), int(k))
        return json.dumps(result, indent=2)
    except ThicksatError as e:
        return json.dumps(e.to_dict(), indent=2)


@mcp.resource("thicksat://zigzag/{n}/{k}")
async def resource_zigzag(n: int, k: int) -> str:
    """Zigzag drawing document for n and k."""
    try:
        result = await get_zigzag_resource(int(n), int(k))
        return json.dumps(result, indent=2)
    except ThicksatError as e:
        return json.dumps(e.to_dict(), indent=2)


def main() -> int:
    """Run the MCP server."""
    mcp.run()
    return 0
