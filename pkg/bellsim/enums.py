import enum


class TransformLaw(str, enum.Enum):
    """
    Coordinate transformation law between the two detector frames.
    """

    NONLINEAR = "nonlinear"  # measure-preserving law of the model
    LINEAR = "linear"  # euclidean law: lambda -> lambda - deltabar


class OutputFormat(str, enum.Enum):
    """
    Machine-readable output formats of the CLI.
    """

    CSV = "csv"
    JSON = "json"


class Subcommand(str, enum.Enum):
    """
    CLI subcommands.
    """

    TRANSFORM = "transform"
    SAMPLE = "sample"
    CORRELATE = "correlate"
    SCAN = "scan"
    CHSH = "chsh"
    HOLONOMY = "holonomy"
    PERCONFIG = "perconfig"
    TOY = "toy"
    TRIANGLE = "triangle"


class Interpretation(str, enum.Enum):
    """
    How the rows of a conditional-probability table are read.
    """

    TWO_INPUT = "two-input"  # rows are (A, B) setting pairs
    SINGLE_INPUT = "single-input"  # rows are values of a single input D


class TriangleMode(str, enum.Enum):
    """
    Geometry of the triangle game.
    """

    FLAT = "flat"
    SPHERE = "sphere"
