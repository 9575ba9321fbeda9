"""Local hidden-variable model of the Bell polarization states."""

__version__ = "0.1.0"
