"""Parameter sweeps over independent, seeded scenario runs."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.config.models import ScenarioConfig
from src.logging.logger_adapter import LoggerAdapter
from src.logging.sim_logger import LOGGER_NAME
from src.metrics.stats import MetricsRow

from .scenario_runner import ScenarioResult, run_scenario


class SweepError(RuntimeError):
    """A sweep point failed; carries the point identity."""

    def __init__(self, point: int, replication: int, params: Dict[str, Any], cause: Exception):
        self.point = point
        self.replication = replication
        self.params = params
        self.cause = cause
        super().__init__(
            f"Sweep point {point} (replication {replication}, {params}) failed: "
            f"{type(cause).__name__}: {cause}"
        )


@dataclass(frozen=True)
class SweepSummary:
    points: int
    runs: int
    rows: int
    workers: int
    wall_seconds: float


Task = Tuple[int, int, ScenarioConfig]


def _sweep_params(config: ScenarioConfig) -> Dict[str, Any]:
    return {key: getattr(config, key) for key in config.sweep_keys()}


def _run_task(task: Task) -> ScenarioResult:
    """Worker-process entry point."""
    point, replication, config = task
    logger = LoggerAdapter(logging.getLogger(LOGGER_NAME))
    return run_scenario(config, point=point, replication=replication, logger=logger)


class SweepRunner:
    """Expands a configuration into runs and collects their rows in order.

    Rows come back ordered by (point, replication, class) whatever the number
    of workers.
    """

    def __init__(self, logger: Optional[Any] = None):
        """Initialize the sweep runner.

        Args:
            logger: Optional logger (SimLogger-compatible)
        """
        self.logger = logger
        self.results: List[ScenarioResult] = []
        self.summary: Optional[SweepSummary] = None

    def tasks(self, config: ScenarioConfig) -> List[Task]:
        return [
            (point, replication, point_config)
            for point, point_config in enumerate(config.sweep_points())
            for replication in range(config.replications)
        ]

    def run_sweep(self, config: ScenarioConfig, parallel: int = 1) -> List[MetricsRow]:
        """Run every (point, replication) of ``config``.

        Args:
            config: Validated configuration, possibly with sweep ranges
            parallel: Number of worker processes; 1 runs in-process

        Returns:
            Class rows of every run in deterministic order

        Raises:
            SweepError: If any run fails
        """
        if parallel < 1:
            raise ValueError(f"parallel must be at least 1, got {parallel}")
        tasks = self.tasks(config)
        workers = min(parallel, len(tasks))
        started = time.perf_counter()

        if self.logger:
            self.logger.log_info(
                "Starting sweep",
                {"scheduler": config.scheduler, "runs": len(tasks), "workers": workers},
            )

        if workers > 1:
            results = self._run_parallel(tasks, workers)
        else:
            results = [self._run_one(task) for task in tasks]

        self.results = results
        rows = [row for result in results for row in result.class_rows]
        self.summary = SweepSummary(
            points=len(config.sweep_points()),
            runs=len(results),
            rows=len(rows),
            workers=workers,
            wall_seconds=time.perf_counter() - started,
        )
        if self.logger and hasattr(self.logger, "log_sweep_summary"):
            self.logger.log_sweep_summary(self.summary)
        return rows

    def _run_one(self, task: Task) -> ScenarioResult:
        point, replication, config = task
        try:
            return run_scenario(config, point=point, replication=replication, logger=self.logger)
        except Exception as e:
            raise self._failure(task, e) from e

    def _run_parallel(self, tasks: List[Task], workers: int) -> List[ScenarioResult]:
        results = []
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_run_task, task) for task in tasks]
            for task, future in zip(tasks, futures):
                try:
                    results.append(future.result())
                except Exception as e:
                    for pending in futures:
                        pending.cancel()
                    raise self._failure(task, e) from e
        return results

    def _failure(self, task: Task, error: Exception) -> SweepError:
        point, replication, config = task
        failure = SweepError(point, replication, _sweep_params(config), error)
        if self.logger:
            self.logger.log_error("Sweep point failed", error, {"point": point})
        return failure
