"""
Custom exceptions for the command-line layer.
"""


class CliError(Exception):
    """Base exception for the command-line layer."""

    pass


class UnknownCommandError(CliError, ValueError):
    """Raised when no registered command has the requested name."""

    def __init__(self, name: str | None = None) -> None:
        if name is not None:
            message = f"Unknown command: {name!r}"
        else:
            message = "Unknown command"
        super().__init__(message)


class InvalidListArgumentError(CliError, ValueError):
    """Raised when a comma-separated flag has the wrong number of items."""

    def __init__(self, value: str | None = None, expected: int | None = None) -> None:
        if value is not None and expected is not None:
            message = f"Expected {expected} comma-separated numbers, got {value!r}"
        else:
            message = "Invalid comma-separated list"
        super().__init__(message)
