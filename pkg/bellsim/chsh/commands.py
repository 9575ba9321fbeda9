"""
CLI subcommands for the CHSH statistic, the geometric-phase cycle and the
per-configuration values.
"""

import logging

from pydantic import Field

from bellsim.cli.router import CommandRouter
from bellsim.cli.schemas import CommandResult, RunConfig, angle_field
from bellsim.enums import OutputFormat, Subcommand, TransformLaw
from bellsim.montecarlo import MonteCarloRunner
from bellsim.transform.schemas import Angle
from .constants import DEFAULT_PROFILE_POINTS, MIN_PROFILE_POINTS
from .schemas import ChshSettings, CycleParams
from .services import (
    classical_chsh,
    geometric_phase_profile,
    model_chsh,
    per_config_distribution,
    tsirelson_scan,
)

logger = logging.getLogger(__name__)

router = CommandRouter()


class ChshParams(RunConfig):
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Output format")
    d1: Angle = angle_field(description="Relative angle delta1 of detector B")
    d2: Angle = angle_field(description="Relative angle delta2 of detector B")
    delta: Angle = angle_field(description="Rotation delta of detector A")
    phi: Angle = angle_field(0.0, description="Source phase")
    scan_grid: int = Field(
        default=0, ge=0, description="Also scan a grid^3 of settings for the largest |S| (0: off)"
    )

    @property
    def settings(self) -> ChshSettings:
        return ChshSettings(delta1=self.d1, delta2=self.d2, delta=self.delta, phi=self.phi)


class HolonomyParams(RunConfig):
    d1: Angle = angle_field(0.0, description="Cycle parameter d1")
    d2: Angle = angle_field(0.0, description="Cycle parameter d2")
    dd: Angle = angle_field(0.0, description="Cycle parameter dd")
    points: int = Field(
        default=DEFAULT_PROFILE_POINTS, ge=MIN_PROFILE_POINTS, description="Grid size over [-pi, pi)"
    )
    law: TransformLaw = Field(default=TransformLaw.NONLINEAR, description="Transformation law")


class PerConfigParams(RunConfig):
    d1: Angle = angle_field(description="Relative angle delta1 of detector B")
    d2: Angle = angle_field(description="Relative angle delta2 of detector B")
    delta: Angle = angle_field(description="Rotation delta of detector A")
    phi: Angle = angle_field(0.0, description="Source phase")


@router.command(
    Subcommand.CHSH,
    params=ChshParams,
    help="CHSH combination of the model and of the classical baseline",
)
def chsh(params: ChshParams, runner: MonteCarloRunner) -> CommandResult:
    settings = params.settings
    result = CommandResult(
        columns=["d1", "d2", "delta", "phi", "statistic", "classical"],
        rows=[
            [
                settings.delta1,
                settings.delta2,
                settings.delta,
                settings.phi,
                model_chsh(settings),
                classical_chsh(settings),
            ]
        ],
    )
    if params.scan_grid:
        scan = tsirelson_scan(params.scan_grid)
        result.summary["scan"] = {
            "grid": scan.grid_n,
            "max_abs": scan.max_abs,
            "argmax": scan.argmax.model_dump(),
        }
    return result


@router.command(
    Subcommand.HOLONOMY,
    params=HolonomyParams,
    help="Defect of the four-map frame cycle over the circle",
)
def holonomy(params: HolonomyParams, runner: MonteCarloRunner) -> CommandResult:
    profile = geometric_phase_profile(
        CycleParams(d1=params.d1, d2=params.d2, dd=params.dd), params.points, params.law
    )
    return CommandResult(
        columns=["lambda", "defect"],
        rows=[[p.lambda_, p.defect] for p in profile.points],
        summary={"sup": profile.sup, "argsup": profile.argsup},
    )


@router.command(
    Subcommand.PERCONFIG,
    params=PerConfigParams,
    help="rho-weighted histogram of the per-configuration CHSH values",
)
def perconfig(params: PerConfigParams, runner: MonteCarloRunner) -> CommandResult:
    settings = ChshSettings(
        delta1=params.d1, delta2=params.d2, delta=params.delta, phi=params.phi
    )
    distribution = per_config_distribution(settings)
    return CommandResult(
        columns=["value", "weight"],
        rows=[[m.value, m.weight] for m in distribution.masses],
        summary={"mean": distribution.mean, "model_chsh": model_chsh(settings)},
    )
