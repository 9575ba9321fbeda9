"""
Custom exceptions for the toymodels module.
"""


class ToyModelError(Exception):
    """Base exception for the toymodels module."""

    pass


class InvalidProbabilityError(ToyModelError, ValueError):
    """Raised when a probability parameter lies outside [0, 1]."""

    def __init__(self, name: str | None = None, value: float | None = None) -> None:
        if name is not None and value is not None:
            message = f"Probability {name} must lie in [0, 1], got {value!r}"
        else:
            message = "Probability must lie in [0, 1]"
        super().__init__(message)


class RowSumError(ToyModelError, ValueError):
    """Raised when a table row does not sum to one."""

    def __init__(self, row: int | None = None, total: float | None = None) -> None:
        if row is not None and total is not None:
            message = f"Row {row} sums to {total!r}, expected 1"
        else:
            message = "Table rows must sum to 1"
        super().__init__(message)


class FeasibilitySolverError(ToyModelError):
    """Raised when the linear program ends in neither a solution nor infeasibility."""

    def __init__(self, status: int | None = None, message: str | None = None) -> None:
        if status is not None:
            text = f"Feasibility LP failed with status {status}: {message}"
        else:
            text = "Feasibility LP failed"
        super().__init__(text)
