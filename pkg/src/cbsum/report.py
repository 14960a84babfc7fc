"""Report shapes shared by all CLI commands.

Every run produces a config dict, a list of result rows, and an
``all_passed`` flag. The three output formats encode the same values:

* json -- ``{"config": {...}, "results": [...], "all_passed": bool}``
* csv  -- one header plus one line per row; the check-style commands
          (verify, steps, bench) share the canonical header
          ``n,step_or_strategy,lhs_digest,rhs_digest,equal,duration_ns``
          while eval and table use value-oriented columns
* text -- human-readable lines produced by the command itself

Rows are plain dicts and are fully sorted before rendering, so output is
deterministic regardless of worker count.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .bench import DEFAULT_NAIVE_CUTOFF
from .chain import CHAIN_COMPARISONS, StepId
from .digests import decimal_digits, decimal_str, value_digest
from .identity import Strategy

#: Canonical CSV columns for comparison-style reports.
CSV_COLUMNS = ("n", "step_or_strategy", "lhs_digest", "rhs_digest", "equal", "duration_ns")

#: Above this many decimal digits, machine output switches from the full
#: decimal value to digest + digit count (unless full_decimal is set).
DEFAULT_DIGEST_THRESHOLD = 1000


class OutputFormat(enum.Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output.

    ``steps_enabled`` and ``strategies_enabled`` are kept in canonical
    order; reports must be byte-identical for equal configs no matter how
    many workers executed the run.
    """

    command: str
    n_min: int
    n_max: int
    strategies_enabled: tuple[Strategy, ...] = ()
    steps_enabled: tuple[StepId, ...] = CHAIN_COMPARISONS
    output_format: OutputFormat = OutputFormat.TEXT
    parallelism: int = 1
    repetitions: int = 1
    naive_cutoff: int = DEFAULT_NAIVE_CUTOFF
    full_decimal: bool = False
    digest_threshold: int = DEFAULT_DIGEST_THRESHOLD

    def validate(self) -> None:
        if self.n_min < 0 or self.n_min > self.n_max:
            raise ValueError(
                f"need 0 <= n_min <= n_max, got {self.n_min}..{self.n_max}"
            )
        if self.command == "steps" and self.n_min < 1:
            raise ValueError(
                "chain steps need n >= 1: the derivation divides by 2n(2n-1), "
                "which degenerates at n = 0"
            )
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be >= 1, got {self.parallelism}")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "strategies": [s.name for s in self.strategies_enabled],
            "steps": [s.name for s in self.steps_enabled],
            "format": self.output_format.value,
            "jobs": self.parallelism,
            "repetitions": self.repetitions,
            "naive_cutoff": self.naive_cutoff,
            "full_decimal": self.full_decimal,
            "digest_threshold": self.digest_threshold,
        }


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str] = CSV_COLUMNS) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(col)) for col in columns])
    return buffer.getvalue()


def render_json(
    config: RunConfig, rows: Sequence[Mapping[str, Any]], all_passed: bool
) -> str:
    payload = {
        "config": config.to_dict(),
        "results": [dict(row) for row in rows],
        "all_passed": all_passed,
    }
    return json.dumps(payload, indent=2) + "\n"


def render_report(
    config: RunConfig,
    rows: Sequence[Mapping[str, Any]],
    all_passed: bool,
    text_lines: Sequence[str],
    csv_columns: Sequence[str] = CSV_COLUMNS,
) -> str:
    if config.output_format is OutputFormat.JSON:
        return render_json(config, rows, all_passed)
    if config.output_format is OutputFormat.CSV:
        return render_csv(rows, csv_columns)
    return "\n".join(text_lines) + ("\n" if text_lines else "")


def describe_value(value: int, config: RunConfig) -> dict[str, Any]:
    """Value fields for machine output, honoring the digest threshold."""
    digits = decimal_digits(value)
    if config.full_decimal or digits <= config.digest_threshold:
        return {"value": decimal_str(value), "digits": digits}
    return {"value": None, "digest": value_digest(value), "digits": digits}
