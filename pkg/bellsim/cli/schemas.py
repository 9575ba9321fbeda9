"""
Pydantic schemas for command parameters and command results.
"""

import math
from typing import Any

from pydantic import BaseModel, Field, ValidationInfo, model_validator
from pydantic.fields import FieldInfo

from bellsim.distribution.constants import MAX_KEY_WORD
from bellsim.distribution.schemas import RngStream
from bellsim.enums import OutputFormat
from .exceptions import InvalidListArgumentError


def angle_field(default: Any = ..., description: str | None = None) -> Any:
    """Field holding an angle in radians; converted from degrees under --degrees."""
    return Field(default, description=description, json_schema_extra={"angle": True})


def is_angle_field(field: FieldInfo) -> bool:
    extra = field.json_schema_extra
    return isinstance(extra, dict) and bool(extra.get("angle"))


def split_numbers(value: Any, expected: int) -> Any:
    """Split "a,b,c" into floats; non-string values are left to pydantic."""
    if not isinstance(value, str):
        return value
    parts = [part.strip() for part in value.split(",")]
    if len(parts) != expected:
        raise InvalidListArgumentError(value, expected)
    return tuple(float(part) for part in parts)


class RunConfig(BaseModel):
    """Parameters shared by every subcommand."""

    format: OutputFormat = Field(default=OutputFormat.CSV, description="Output format")

    @model_validator(mode="before")
    @classmethod
    def convert_degrees(cls, data: Any, info: ValidationInfo) -> Any:
        """Read angle fields in degrees when the context asks for it."""
        if not isinstance(data, dict) or not (info.context or {}).get("degrees"):
            return data
        converted = dict(data)
        for name, field in cls.model_fields.items():
            if is_angle_field(field) and name in converted:
                converted[name] = math.radians(float(converted[name]))
        return converted

    model_config = {"extra": "forbid", "frozen": True}


class SampledRunConfig(RunConfig):
    """Parameters of subcommands that draw random numbers."""

    seed: int = Field(default=0, ge=0, le=MAX_KEY_WORD, description="Random seed")
    samples: int = Field(default=100_000, ge=1, description="Number of Monte Carlo draws")

    @property
    def stream(self) -> RngStream:
        return RngStream(seed=self.seed)


Cell = float | int | str | bool


class CommandResult(BaseModel):
    """Tabular output of a command, with optional scalar summary for JSON."""

    columns: list[str]
    rows: list[list[Cell]] = Field(default_factory=list)
    summary: dict[str, Any] = Field(default_factory=dict)

    model_config = {"extra": "forbid"}


class ResultEnvelope(BaseModel):
    """Top-level JSON document written by every subcommand."""

    command: str
    params: dict[str, Any]
    results: Any

    model_config = {"extra": "forbid", "frozen": True}
