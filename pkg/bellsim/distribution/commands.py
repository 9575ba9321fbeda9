"""
CLI subcommand for drawing hidden configurations.
"""

from bellsim.cli.router import CommandRouter
from bellsim.cli.schemas import CommandResult, SampledRunConfig
from bellsim.enums import Subcommand
from bellsim.montecarlo import MonteCarloRunner
from .services import sample_array

router = CommandRouter()


class SampleParams(SampledRunConfig):
    pass


@router.command(
    Subcommand.SAMPLE,
    params=SampleParams,
    help="Draw hidden configurations from rho = |sin|/4",
)
def sample(params: SampleParams, runner: MonteCarloRunner) -> CommandResult:
    draws = sample_array(params.stream, params.samples, runner)
    return CommandResult(columns=["lambda"], rows=[[float(lam)] for lam in draws])
