"""Search tools: exhaustive enumeration and bound verification."""

import asyncio
from typing import Any

from thicksat.errors import ERROR_INVALID_PARAMETERS, ThicksatError
from thicksat.oracle import NamedBound, enumerate_saturated, verify_bound
from thicksat.tools.drawing import parse_mode


async def enumerate_saturated_counts(
    n: int,
    k: int,
    mode: str = "precolored",
    cap: int | None = None,
) -> dict[str, Any]:
    """Enumerate saturated convex drawings and report min and max edge counts.

    Args:
        n: Number of vertices
        k: Number of colors
        mode: precolored or free
        cap: Largest admissible n (defaults to the configured cap)

    Returns:
        Result dictionary with the enumeration result and witnesses
    """
    saturation_mode = parse_mode(mode)
    result = await asyncio.to_thread(enumerate_saturated, n, k, saturation_mode, None, cap)
    return {"success": True, "result": result.to_dict()}


async def verify_named_bound(n: int, k: int, bound: str) -> dict[str, Any]:
    """Check a named edge bound against exhaustive enumeration.

    Args:
        n: Number of vertices
        k: Number of colors
        bound: One of the NamedBound values, e.g. theta2_exact

    Returns:
        Result dictionary with PASS or FAIL and the extremal witnesses
    """
    try:
        named = NamedBound(bound)
    except ValueError:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"Unknown bound '{bound}'",
            {"provided": bound, "valid_options": [b.value for b in NamedBound]},
        ) from None
    report = await asyncio.to_thread(verify_bound, n, k, named)
    return {"success": True, **report.to_dict()}
