"""Error types for thicksat.

All failures raised by the toolkit are ``ThicksatError`` instances carrying a
machine-readable code, a message and a details dictionary.
"""

from typing import Any

# Error codes
ERROR_INVALID_DRAWING = "INVALID_DRAWING"
ERROR_INVALID_COLORING = "INVALID_COLORING"
ERROR_INVALID_PARAMETERS = "INVALID_PARAMETERS"
ERROR_INVALID_MATCHING = "INVALID_MATCHING"
ERROR_EDGE_PRESENT = "EDGE_PRESENT"
ERROR_NON_CONVEX = "NON_CONVEX"
ERROR_GENERAL_POSITION = "GENERAL_POSITION"
ERROR_PARSE = "PARSE_ERROR"
ERROR_CAP_EXCEEDED = "CAP_EXCEEDED"
ERROR_INCONCLUSIVE = "INCONCLUSIVE"


class ThicksatError(Exception):
    """Base exception for thicksat errors."""

    def __init__(self, code: str, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict[str, Any]:
        """Convert error to dictionary format."""
        return {
            "success": False,
            "error": {
                "code": self.code,
                "message": self.message,
                "details": self.details,
            },
        }


class InconclusiveError(ThicksatError):
    """A bounded search ran out of budget before reaching a verdict."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(ERROR_INCONCLUSIVE, message, details)


class DocumentError(ThicksatError):
    """A drawing document could not be parsed.

    Args:
        message: Human-readable diagnostic
        field: Path of the offending field, e.g. ``vertices[3][0]``
        details: Extra context such as ``line`` and ``column``
    """

    def __init__(
        self,
        message: str,
        field: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        merged = dict(details or {})
        if field is not None:
            merged["field"] = field
        super().__init__(ERROR_PARSE, message, merged)
        self.field = field


def require(condition: bool, code: str, message: str, **details: Any) -> None:
    """Raise a ThicksatError unless condition holds.

    Args:
        condition: The precondition to check
        code: Error code to raise with
        message: Message citing the violated condition
        **details: Extra context stored on the error

    Raises:
        ThicksatError: If condition is false
    """
    if not condition:
        raise ThicksatError(code, message, details)
