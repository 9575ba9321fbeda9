"""
Main command-line entry point.
Configures logging, includes every command router and maps exceptions to exit codes.
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from bellsim import __version__
from bellsim.chsh.commands import router as chsh_router
from bellsim.chsh.exceptions import ChshError
from bellsim.cli.exceptions import CliError
from bellsim.cli.formatting import render
from bellsim.cli.router import CommandRouter, add_subparsers
from bellsim.config import configure_logging, settings
from bellsim.distribution.commands import router as distribution_router
from bellsim.distribution.exceptions import DistributionError
from bellsim.experiment.commands import router as experiment_router
from bellsim.experiment.exceptions import ExperimentError
from bellsim.montecarlo import get_runner
from bellsim.toymodels.commands import router as toymodels_router
from bellsim.toymodels.exceptions import FeasibilitySolverError, ToyModelError
from bellsim.transform.commands import router as transform_router
from bellsim.transform.exceptions import InternalConsistencyError, TransformError
from bellsim.trianglegame.commands import router as trianglegame_router
from bellsim.trianglegame.exceptions import TriangleGameError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_USAGE_ERROR = 2

# Looked up along the exception's MRO, so the most specific class wins;
# anything unlisted, including a bare ValueError, is an internal error
EXIT_CODES: dict[type[BaseException], int] = {
    ValidationError: EXIT_USAGE_ERROR,
    CliError: EXIT_USAGE_ERROR,
    TransformError: EXIT_USAGE_ERROR,
    DistributionError: EXIT_USAGE_ERROR,
    ExperimentError: EXIT_USAGE_ERROR,
    ChshError: EXIT_USAGE_ERROR,
    ToyModelError: EXIT_USAGE_ERROR,
    TriangleGameError: EXIT_USAGE_ERROR,
    InternalConsistencyError: EXIT_INTERNAL_ERROR,
    FeasibilitySolverError: EXIT_INTERNAL_ERROR,
}

# Options shared by every subcommand; not part of any parameter model
GLOBAL_OPTIONS = ("command", "degrees", "workers", "log_level")

router = CommandRouter()
router.include_router(transform_router)
router.include_router(distribution_router)
router.include_router(experiment_router)
router.include_router(chsh_router)
router.include_router(toymodels_router)
router.include_router(trianglegame_router)


def exit_code_for(exc: BaseException) -> int:
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return EXIT_INTERNAL_ERROR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--degrees", action="store_true", help="Read angle arguments in degrees"
    )
    common.add_argument(
        "--workers", type=int, default=None, help="Monte Carlo worker processes"
    )
    common.add_argument("--log-level", default=None, help="Logging level")

    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Local hidden-variable model of the Bell polarization states",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    add_subparsers(parser, router, parents=[common])
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command; results go to standard output, diagnostics to standard error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on malformed arguments and 0 after --help/--version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE_ERROR

    configure_logging(args.log_level)
    values = {k: v for k, v in vars(args).items() if k not in GLOBAL_OPTIONS}

    try:
        command = router.get(args.command)
        params = command.parse(values, degrees=args.degrees)
        logger.info(f"Running {command.name.value} with {params.model_dump(mode='json')}")
        result = command.handler(params, get_runner(args.workers))
        output = render(
            params.format, command.name.value, params.model_dump(mode="json"), result
        )
    except Exception as exc:
        code = exit_code_for(exc)
        if code == EXIT_USAGE_ERROR:
            logger.warning(f"Rejected arguments: {exc}")
        else:
            logger.error(f"Internal error: {exc}", exc_info=True)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return code

    sys.stdout.write(output)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
