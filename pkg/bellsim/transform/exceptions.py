"""
Custom exceptions for the transform module.
"""


class TransformError(Exception):
    """Base exception for the transform module."""

    pass


class NonFiniteAngleError(TransformError, ValueError):
    """Raised when an angle is NaN or infinite."""

    def __init__(self, value: float | None = None) -> None:
        if value is not None:
            message = f"Angle must be finite, got {value!r}"
        else:
            message = "Angle must be finite"
        super().__init__(message)


class InternalConsistencyError(TransformError):
    """Raised when an arccos argument leaves the clamp band around [-1, 1]."""

    def __init__(self, argument: float | None = None, band: float | None = None) -> None:
        if argument is not None and band is not None:
            message = (
                f"arccos argument {argument!r} outside [-1-{band}, 1+{band}]"
            )
        else:
            message = "arccos argument out of range"
        super().__init__(message)


class InvalidGridError(TransformError, ValueError):
    """Raised when a grid has too few points."""

    def __init__(self, points: int | None = None, minimum: int = 1) -> None:
        if points is not None:
            message = f"Grid needs at least {minimum} points, got {points}"
        else:
            message = "Invalid grid size"
        super().__init__(message)
