"""Scenario runs, parameter sweeps and CSV output."""

from .csv_writer import emit_csv
from .scenario_runner import ScenarioResult, run_scenario
from .sweep_runner import SweepError, SweepRunner, SweepSummary

__all__ = [
    "ScenarioResult",
    "SweepError",
    "SweepRunner",
    "SweepSummary",
    "emit_csv",
    "run_scenario",
]
