"""
Custom exceptions for the chsh module.
"""


class ChshError(Exception):
    """Base exception for the chsh module."""

    pass


class InvalidCorrelationError(ChshError, ValueError):
    """Raised when a correlation lies outside [-1, 1]."""

    def __init__(self, value: float | None = None) -> None:
        if value is not None:
            message = f"Correlation must lie in [-1, 1], got {value!r}"
        else:
            message = "Invalid correlation"
        super().__init__(message)


class NonBinaryOutcomeError(ChshError, ValueError):
    """Raised when a detector outcome is neither +1 nor -1."""

    def __init__(self, value: object = None) -> None:
        if value is not None:
            message = f"Outcome must be +1 or -1, got {value!r}"
        else:
            message = "Outcome must be +1 or -1"
        super().__init__(message)


class InvalidGridError(ChshError, ValueError):
    """Raised when a grid has too few points."""

    def __init__(self, points: int | None = None, minimum: int = 2) -> None:
        if points is not None:
            message = f"Grid needs at least {minimum} points, got {points}"
        else:
            message = "Invalid grid size"
        super().__init__(message)
