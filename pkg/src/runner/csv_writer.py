"""CSV emission of sweep results."""

import csv
import sys
from dataclasses import fields
from typing import Any, List, Optional, TextIO

from src.metrics.stats import MetricsRow

METRIC_COLUMNS = [f.name for f in fields(MetricsRow) if f.name != "scenario"]
DELAY_COLUMNS = ("mean_delay_ns", "min_delay_ns", "max_delay_ns", "jitter_ns", "throughput_bps")
RATIO_COLUMNS = ("loss_ratio",)


def _cell(column: str, value: Any) -> str:
    if value is None:
        return ""
    if column in RATIO_COLUMNS:
        return f"{value:.6f}"
    if column in DELAY_COLUMNS:
        return str(int(round(value)))
    return str(value)


def header_for(rows: List[MetricsRow]) -> List[str]:
    """Scenario keys in alphabetical order, then the metric columns."""
    return sorted(rows[0].scenario) + METRIC_COLUMNS


def write_rows(rows: List[MetricsRow], stream: TextIO) -> None:
    if not rows:
        raise ValueError("No result rows to write")
    header = header_for(rows)
    scenario_keys = header[: len(header) - len(METRIC_COLUMNS)]
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [_cell(key, row.scenario.get(key)) for key in scenario_keys]
            + [_cell(column, getattr(row, column)) for column in METRIC_COLUMNS]
        )


def emit_csv(rows: List[MetricsRow], path: Optional[str] = None) -> None:
    """Write the rows as CSV to ``path``, or to stdout when no path is given.

    Raises:
        ValueError: If there are no rows
        OSError: If the target cannot be written; the message names the path
    """
    if not rows:
        raise ValueError("No result rows to write")
    if path is None or path == "-":
        write_rows(rows, sys.stdout)
        return
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            write_rows(rows, f)
    except OSError as e:
        raise OSError(f"Cannot write results to {path}: {e.strerror or e}") from e
