"""
CLI subcommand for the flat and spherical triangle games.
"""

import math
from typing import Any

import numpy as np
from pydantic import Field, field_validator

from bellsim.cli.router import CommandRouter
from bellsim.cli.schemas import CommandResult, RunConfig, angle_field, split_numbers
from bellsim.distribution.constants import MAX_KEY_WORD
from bellsim.distribution.schemas import RngStream
from bellsim.enums import OutputFormat, Subcommand, TriangleMode
from bellsim.montecarlo import MonteCarloRunner
from bellsim.transform.schemas import Angle
from .schemas import GameReport, SphericalTriangle, UnitVec3
from .services import flat_game, spherical_game, transported_reference_angles

router = CommandRouter()

Vector = tuple[float, float, float]


class TriangleParams(RunConfig):
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Output format")
    mode: TriangleMode = Field(default=TriangleMode.FLAT, description="Game geometry")
    n: int = Field(default=100_000, ge=1, description="Number of draws")
    seed: int = Field(default=0, ge=0, le=MAX_KEY_WORD, description="Random seed")
    angle_ab: Angle = angle_field(2.0 * math.pi / 3.0, description="Flat: angle of B's reference")
    angle_ac: Angle = angle_field(-2.0 * math.pi / 3.0, description="Flat: angle of C's reference")
    vertex_a: Vector = Field(default=(1.0, 0.0, 0.0), description="Sphere: vertex A as x,y,z")
    vertex_b: Vector = Field(default=(0.0, 1.0, 0.0), description="Sphere: vertex B as x,y,z")
    vertex_c: Vector = Field(default=(0.0, 0.0, 1.0), description="Sphere: vertex C as x,y,z")
    ref_a: Angle = angle_field(0.0, description="Sphere: reference angle at A")
    ref_b: Angle = angle_field(0.0, description="Sphere: reference angle at B")
    ref_c: Angle = angle_field(0.0, description="Sphere: reference angle at C")
    transported_refs: bool = Field(
        default=False, description="Sphere: carry A's reference to B and C by transport"
    )

    @field_validator("vertex_a", "vertex_b", "vertex_c", mode="before")
    @classmethod
    def split_vertex(cls, value: Any) -> Any:
        return split_numbers(value, expected=3)

    @property
    def stream(self) -> RngStream:
        return RngStream(seed=self.seed)

    def triangle(self) -> SphericalTriangle:
        a, b, c = (
            UnitVec3.normalized(np.array(v)) for v in (self.vertex_a, self.vertex_b, self.vertex_c)
        )
        return SphericalTriangle(a=a, b=b, c=c)


def _result(report: GameReport) -> CommandResult:
    return CommandResult(
        columns=["pair", "mean", "stderr", "n"],
        rows=[
            [pair, estimate.mean, estimate.stderr, estimate.n]
            for pair, estimate in (("AB", report.e_ab), ("AC", report.e_ac), ("BC", report.e_bc))
        ],
        summary={
            "slack": report.slack,
            "slack_stderr": report.slack_stderr,
            "holonomy": report.holonomy,
            "identity_violations": report.identity_violations,
        },
    )


@router.command(
    Subcommand.TRIANGLE,
    params=TriangleParams,
    help="Flat or spherical triangle game",
)
def triangle(params: TriangleParams, runner: MonteCarloRunner) -> CommandResult:
    if params.mode is TriangleMode.FLAT:
        return _result(flat_game(params.angle_ab, params.angle_ac, params.n, params.stream, runner))

    tri = params.triangle()
    if params.transported_refs:
        refs = transported_reference_angles(tri, params.ref_a)
    else:
        refs = (params.ref_a, params.ref_b, params.ref_c)
    return _result(spherical_game(tri, refs, params.n, params.stream, runner))
