"""
Custom exceptions for the experiment module.
"""


class ExperimentError(Exception):
    """Base exception for the experiment module."""

    pass


class InvalidDistributionError(ExperimentError, ValueError):
    """Raised when joint probabilities are negative or do not sum to one."""

    def __init__(self, total: float | None = None) -> None:
        if total is not None:
            message = f"Joint probabilities must sum to 1, got {total!r}"
        else:
            message = "Invalid joint distribution"
        super().__init__(message)


class InvalidGridError(ExperimentError, ValueError):
    """Raised when a grid has too few points."""

    def __init__(self, points: int | None = None, minimum: int = 1) -> None:
        if points is not None:
            message = f"Grid needs at least {minimum} points, got {points}"
        else:
            message = "Invalid grid size"
        super().__init__(message)
