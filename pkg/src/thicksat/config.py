"""Configuration defaults for thicksat.

Values here are plain module-level constants; the enumeration cap can be
overridden at runtime through the ``THICKSAT_CAP`` environment variable.
"""

import os

from thicksat.errors import ERROR_INVALID_PARAMETERS, ThicksatError

DOCUMENT_VERSION = "1"

# Backtracking node limit for free-mode colorability searches
DEFAULT_MAX_NODES = 200_000

# Enumeration caps on n. Expected runtimes on a desktop machine:
#   free, n = 8, k = 2:        about a minute
#   precolored, n = 9, k = 2:  a few minutes
# Both grow exponentially in n.
DEFAULT_FREE_CAP = 8
DEFAULT_PRECOLORED_CAP = 9
CAP_ENV_VAR = "THICKSAT_CAP"

# Node limit for a single enumeration search tree
DEFAULT_ENUMERATION_NODES = 50_000_000

# Stroke colors in color-class order; further classes get generated hues
PALETTE = ("#1f5fbf", "#d62728", "#2ca02c")

# Exit codes of the command line
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE_ERROR = 2
EXIT_INCONCLUSIVE = 3


def enumeration_cap(precolored: bool) -> int:
    """Return the largest n the enumeration oracle accepts.

    Args:
        precolored: True for the precolored setting, False for the free one

    Returns:
        The cap from ``THICKSAT_CAP`` if set, else the mode default

    Raises:
        ThicksatError: If the environment override is not a positive integer
    """
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_PRECOLORED_CAP if precolored else DEFAULT_FREE_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap <= 0:
        raise ThicksatError(
            ERROR_INVALID_PARAMETERS,
            f"{CAP_ENV_VAR} must be a positive integer, got '{raw}'",
            {"provided": raw},
        )
    return cap


def palette_color(index: int) -> str:
    """Return the stroke color for the color class with 0-based index."""
    if index < len(PALETTE):
        return PALETTE[index]
    # golden-angle hue steps keep generated colors apart
    hue = (index * 137) % 360
    return f"hsl({hue},65%,40%)"
