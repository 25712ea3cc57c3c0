"""Saturated drawings of graphs with bounded geometric thickness.

This package constructs, saturates, verifies and enumerates straight-line
drawings whose edges admit a k-coloring without monochromatic crossings.
"""

__version__ = "0.1.0"
