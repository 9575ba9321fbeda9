"""
Custom exceptions for the distribution module.
"""


class DistributionError(Exception):
    """Base exception for the distribution module."""

    pass


class InvalidSampleCountError(DistributionError, ValueError):
    """Raised when a sample count is below the allowed minimum."""

    def __init__(self, n: int | None = None, minimum: int = 0) -> None:
        if n is not None:
            message = f"Invalid sample count: {n}. Count must be at least {minimum}"
        else:
            message = "Invalid sample count provided"
        super().__init__(message)
