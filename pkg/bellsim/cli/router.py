"""
Command router.

Each domain module registers its subcommands on a CommandRouter, the way web
modules register endpoints on an API router; the main module includes all of
them and builds one argparse parser. Flags are derived from the fields of the
command's parameter model: field ``angle_ab`` becomes ``--angle-ab``, booleans
become switches and enums get their values as choices. Values reach pydantic
as strings, so validation and angle wrapping happen in one place.
"""

import argparse
import enum
import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from bellsim.enums import Subcommand
from bellsim.montecarlo import MonteCarloRunner
from .exceptions import UnknownCommandError
from .schemas import CommandResult, RunConfig

logger = logging.getLogger(__name__)

CommandHandler = Callable[[Any, MonteCarloRunner], CommandResult]


@dataclass(frozen=True)
class Command:
    name: Subcommand
    handler: CommandHandler
    params_model: type[RunConfig]
    help: str
    description: str | None = None

    def parse(self, values: dict[str, Any], degrees: bool = False) -> RunConfig:
        return self.params_model.model_validate(values, context={"degrees": degrees})


@dataclass
class CommandRouter:
    commands: list[Command] = field(default_factory=list)

    def command(
        self,
        name: Subcommand,
        *,
        params: type[RunConfig],
        help: str,
        description: str | None = None,
    ) -> Callable[[CommandHandler], CommandHandler]:
        """Register the decorated function as the handler of a subcommand."""

        def decorator(handler: CommandHandler) -> CommandHandler:
            self.commands.append(
                Command(
                    name=name,
                    handler=handler,
                    params_model=params,
                    help=help,
                    description=description or handler.__doc__,
                )
            )
            return handler

        return decorator

    def include_router(self, router: "CommandRouter") -> None:
        self.commands.extend(router.commands)

    def get(self, name: str) -> Command:
        for command in self.commands:
            if command.name.value == name:
                return command
        raise UnknownCommandError(name)


def add_model_arguments(parser: argparse.ArgumentParser, model: type[RunConfig]) -> None:
    """Add one flag per field of a parameter model."""
    for name, info in model.model_fields.items():
        flag = "--" + name.replace("_", "-")
        kwargs: dict[str, Any] = {
            "dest": name,
            "help": info.description,
            "default": argparse.SUPPRESS,
        }
        annotation = info.annotation
        if annotation is bool:
            kwargs["action"] = "store_true"
        else:
            if isinstance(annotation, type) and issubclass(annotation, enum.Enum):
                kwargs["choices"] = [member.value for member in annotation]
            kwargs["required"] = info.is_required()
        parser.add_argument(flag, **kwargs)


def add_subparsers(
    parser: argparse.ArgumentParser,
    router: CommandRouter,
    parents: list[argparse.ArgumentParser],
) -> None:
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in router.commands:
        subparser = subparsers.add_parser(
            command.name.value,
            help=command.help,
            description=command.description,
            parents=parents,
        )
        add_model_arguments(subparser, command.params_model)
    logger.debug(f"Registered {len(router.commands)} commands")
