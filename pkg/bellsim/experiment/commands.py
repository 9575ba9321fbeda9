"""
CLI subcommands for single correlations and correlation scans.
"""

import logging

from pydantic import Field

from bellsim.cli.router import CommandRouter
from bellsim.cli.schemas import CommandResult, SampledRunConfig, angle_field
from bellsim.enums import Subcommand
from bellsim.models import CorrelationEstimate
from bellsim.montecarlo import MonteCarloRunner
from bellsim.transform.schemas import Angle, ExperimentSetting
from .constants import DEFAULT_SCAN_POINTS
from .enums import Source
from .services import (
    classical_correlation,
    classical_mc_correlation,
    correlation_scan,
    exact_correlation,
    incoherent_correlation,
    mc_correlation,
)

logger = logging.getLogger(__name__)

router = CommandRouter()

SCAN_COLUMNS = ["deltabar", "e_exact", "e_mc", "stderr", "n"]


class CorrelateParams(SampledRunConfig):
    delta: Angle = angle_field(description="Relative detector orientation")
    phi: Angle = angle_field(0.0, description="Source phase")
    source: Source = Field(default=Source.COHERENT, description="Source model")


class ScanParams(SampledRunConfig):
    points: int = Field(default=DEFAULT_SCAN_POINTS, ge=1, description="Grid size over [-pi, pi)")
    phi: Angle = angle_field(0.0, description="Source phase")


def _row(deltabar: float, exact: float, estimate: CorrelationEstimate) -> list[float | int]:
    return [deltabar, exact, estimate.mean, estimate.stderr, estimate.n]


@router.command(
    Subcommand.CORRELATE,
    params=CorrelateParams,
    help="Exact and Monte Carlo correlation at one setting",
)
def correlate(params: CorrelateParams, runner: MonteCarloRunner) -> CommandResult:
    setting = ExperimentSetting(delta=params.delta, phi=params.phi)
    logger.info(f"Correlate: deltabar={setting.deltabar:.6f}, source={params.source.value}")

    if params.source is Source.CLASSICAL:
        estimate = classical_mc_correlation(setting.deltabar, params.samples, params.stream, runner)
        row = _row(setting.deltabar, classical_correlation(setting.deltabar), estimate)
    elif params.source is Source.INCOHERENT:
        # the phase is redrawn per realization, so only delta is fixed
        estimate = incoherent_correlation(params.delta, params.samples, params.stream, runner)
        row = _row(params.delta, 0.0, estimate)
    else:
        estimate = mc_correlation(setting, params.samples, params.stream, runner)
        row = _row(setting.deltabar, exact_correlation(setting), estimate)

    return CommandResult(columns=SCAN_COLUMNS, rows=[row])


@router.command(
    Subcommand.SCAN,
    params=ScanParams,
    help="Correlation scan over a uniform grid of delta",
)
def scan(params: ScanParams, runner: MonteCarloRunner) -> CommandResult:
    rows = correlation_scan(params.points, params.samples, params.stream, params.phi, runner)
    return CommandResult(
        columns=SCAN_COLUMNS,
        rows=[[r.deltabar, r.e_exact, r.e_mc, r.stderr, r.n] for r in rows],
    )
