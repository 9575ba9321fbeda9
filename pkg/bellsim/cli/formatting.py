"""
CSV and JSON writers.

CSV cells show every float with exactly OUTPUT_SIGNIFICANT_DIGITS significant
digits, trailing zeros included. JSON numbers are rounded to the same precision
and printed in shortest form. CSV
uses LF line endings and JSON keys are sorted, so identical results always
serialize to identical bytes.
"""

import csv
import io
import json
import math
from typing import Any

from bellsim.constants import OUTPUT_SIGNIFICANT_DIGITS
from bellsim.enums import OutputFormat
from .schemas import CommandResult, ResultEnvelope


def format_number(value: float) -> str:
    return f"{value:#.{OUTPUT_SIGNIFICANT_DIGITS}g}"


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def round_significant(value: Any) -> Any:
    """Round every float in a nested structure to the output precision."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return value
        return float(format_number(value))
    if isinstance(value, dict):
        return {key: round_significant(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_significant(item) for item in value]
    return value


def render_csv(result: CommandResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_cell(cell) for cell in row])
    return buffer.getvalue()


def json_results(result: CommandResult) -> Any:
    """Rows as a list of objects (a plain array for one column), plus the summary."""
    if len(result.columns) == 1:
        rows: list[Any] = [row[0] for row in result.rows]
    else:
        rows = [dict(zip(result.columns, row)) for row in result.rows]
    if not result.summary:
        return rows
    return {"rows": rows, **result.summary}


def render_json(command: str, params: dict[str, Any], result: CommandResult) -> str:
    envelope = ResultEnvelope(
        command=command,
        params=round_significant(params),
        results=round_significant(json_results(result)),
    )
    return json.dumps(envelope.model_dump(), indent=2, sort_keys=True) + "\n"


def render(
    output_format: OutputFormat,
    command: str,
    params: dict[str, Any],
    result: CommandResult,
) -> str:
    if output_format is OutputFormat.JSON:
        return render_json(command, params, result)
    return render_csv(result)
