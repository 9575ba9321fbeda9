"""Detector outcome and source enums."""

from enum import Enum, IntEnum


class Outcome(IntEnum):
    """Binary detector result."""

    PLUS = 1
    MINUS = -1


class Source(str, Enum):
    """Which source feeds the correlation estimate."""

    COHERENT = "coherent"  # fixed source phase, transformation law of the model
    INCOHERENT = "incoherent"  # fresh uniform source phase per realization
    CLASSICAL = "classical"  # uniform pointer with the euclidean law
