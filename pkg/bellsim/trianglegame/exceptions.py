"""
Custom exceptions for the trianglegame module.
"""


class TriangleGameError(Exception):
    """Base exception for the trianglegame module."""

    pass


class NotUnitVectorError(TriangleGameError, ValueError):
    """Raised when a vector that must be unit is not."""

    def __init__(self, norm: float | None = None) -> None:
        if norm is not None:
            message = f"Expected a unit vector, got norm {norm!r}"
        else:
            message = "Expected a unit vector"
        super().__init__(message)


class NotTangentError(TriangleGameError, ValueError):
    """Raised when a direction is not orthogonal to its base point."""

    def __init__(self, dot: float | None = None) -> None:
        if dot is not None:
            message = f"Direction is not tangent to its base point: dot = {dot!r}"
        else:
            message = "Direction is not tangent to its base point"
        super().__init__(message)


class AntipodalTransportError(TriangleGameError, ValueError):
    """Raised when transport is requested between antipodal points."""

    def __init__(self) -> None:
        super().__init__("Geodesic between antipodal points is not unique")


class DegenerateTriangleError(TriangleGameError, ValueError):
    """Raised when the three vertices do not span a proper spherical triangle."""

    def __init__(self, reason: str | None = None) -> None:
        if reason is not None:
            message = f"Degenerate spherical triangle: {reason}"
        else:
            message = "Degenerate spherical triangle"
        super().__init__(message)
