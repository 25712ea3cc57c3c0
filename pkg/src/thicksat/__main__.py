"""Entry point for the thicksat command line.

Run with:
    uv run python -m thicksat
    or
    uv run thicksat
"""

import sys

from thicksat.cli import main

if __name__ == "__main__":
    sys.exit(main())
