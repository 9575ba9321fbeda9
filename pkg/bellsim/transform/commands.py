"""
CLI subcommand for the transformation-law curve.
"""

import logging

from pydantic import Field

from bellsim.cli.router import CommandRouter
from bellsim.cli.schemas import CommandResult, RunConfig, angle_field
from bellsim.enums import Subcommand
from bellsim.montecarlo import MonteCarloRunner
from .constants import DEFAULT_CURVE_POINTS
from .schemas import Angle
from .services import transform_curve

logger = logging.getLogger(__name__)

router = CommandRouter()


class TransformParams(RunConfig):
    deltabar: Angle = angle_field(description="Effective setting delta - phi")
    points: int = Field(default=DEFAULT_CURVE_POINTS, ge=1, description="Grid size over [-pi, pi)")
    with_linear: bool = Field(default=False, description="Add the euclidean law as a column")


@router.command(
    Subcommand.TRANSFORM,
    params=TransformParams,
    help="Sample the transformation law L(lambda; deltabar)",
)
def transform(params: TransformParams, runner: MonteCarloRunner) -> CommandResult:
    """Emit (lambda, L(lambda; deltabar)) on a uniform grid of the circle."""
    curve = transform_curve(params.deltabar, params.points)
    if params.with_linear:
        return CommandResult(
            columns=["lambda", "l_value", "linear"],
            rows=[[p.lambda_, p.l_value, p.linear] for p in curve],
        )
    return CommandResult(
        columns=["lambda", "l_value"],
        rows=[[p.lambda_, p.l_value] for p in curve],
    )
