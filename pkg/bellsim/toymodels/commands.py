"""
CLI subcommand for the toy conditional-probability tables.
"""

from typing import Any, Literal

from pydantic import Field, field_validator

from bellsim.cli.router import CommandRouter
from bellsim.cli.schemas import CommandResult, RunConfig, split_numbers
from bellsim.enums import Interpretation, OutputFormat, Subcommand
from bellsim.montecarlo import MonteCarloRunner
from .schemas import FeasibilityVerdict
from .services import local_feasibility, row_correlations, table1, table2

router = CommandRouter()


class ToyParams(RunConfig):
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Output format")
    table: Literal[1, 2] = Field(default=1, description="Table 1 (two inputs) or 2 (one input)")
    p: tuple[float, float, float, float] = Field(
        default=(1.0, 1.0, 1.0, 1.0), description="Row parameters p1,p2,p3,p4"
    )
    interpretation: Interpretation | None = Field(
        default=None, description="two-input or single-input (default: by table)"
    )

    @field_validator("p", mode="before")
    @classmethod
    def split_p(cls, value: Any) -> Any:
        return split_numbers(value, expected=4)

    @field_validator("table", mode="before")
    @classmethod
    def parse_table(cls, value: Any) -> Any:
        return int(value) if isinstance(value, str) and value.strip().isdigit() else value


def _verdict_summary(verdict: FeasibilityVerdict) -> dict[str, Any]:
    summary: dict[str, Any] = {
        "feasible": verdict.feasible,
        "interpretation": verdict.interpretation.value,
        "certificate": verdict.certificate.model_dump(mode="json") if verdict.certificate else None,
    }
    if verdict.mixture is not None:
        summary["witness"] = [
            {"strategy": s.label, "weight": w}
            for s, w in zip(verdict.mixture.strategies, verdict.mixture.weights)
            if w > 0.0
        ]
    elif verdict.model is not None:
        summary["witness"] = [
            {"weight": point.weight, "outcomes": list(point.outcomes)}
            for point in verdict.model.points
        ]
    return summary


@router.command(
    Subcommand.TOY,
    params=ToyParams,
    help="Local-model feasibility of the toy conditional-probability tables",
)
def toy(params: ToyParams, runner: MonteCarloRunner) -> CommandResult:
    build = table1 if params.table == 1 else table2
    table = build(*params.p)
    interpretation = params.interpretation or (
        Interpretation.TWO_INPUT if params.table == 1 else Interpretation.SINGLE_INPUT
    )
    verdict = local_feasibility(table, interpretation)
    correlations = row_correlations(table)
    return CommandResult(
        columns=["row", "p_pp", "p_pm", "p_mp", "p_mm", "correlation"],
        rows=[
            [label, *row, correlation]
            for label, row, correlation in zip(table.rows, table.p, correlations)
        ],
        summary=_verdict_summary(verdict),
    )
