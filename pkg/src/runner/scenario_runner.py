"""Runs one scenario point end to end."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.config.models import ScenarioConfig
from src.engine.event import EventKind
from src.engine.simulator import Simulator
from src.metrics.collector import MetricsCollector
from src.metrics.stats import MetricsRow
from src.network.topology import build_ring
from src.traffic.rng import derive_run_seed


@dataclass(frozen=True)
class ScenarioResult:
    """Outcome of one run; picklable so sweep workers can return it."""

    scheduler: str
    point: int
    replication: int
    run_seed: int
    clock: int
    events_processed: int
    class_rows: List[MetricsRow]
    per_stream: Dict[int, MetricsRow]
    purge_count: int
    overflow_count: int
    carryover_count: int
    in_flight: int
    ledger: Dict[str, Dict[str, int]] = field(default_factory=dict)
    frames_transmitted: int = 0
    link_utilization: Dict[int, float] = field(default_factory=dict)

    def row(self, klass: str) -> MetricsRow:
        for row in self.class_rows:
            if row.klass == klass:
                return row
        raise KeyError(klass)


def run_scenario(
    config: ScenarioConfig,
    point: int = 0,
    replication: int = 0,
    logger: Optional[Any] = None,
) -> ScenarioResult:
    """Simulate one scalar scenario point.

    Args:
        config: Scenario point (sweep keys must be scalars)
        point: Index of the point within its sweep
        replication: Replication index
        logger: Optional logger

    Returns:
        ScenarioResult with one MetricsRow per class
    """
    run_seed = derive_run_seed(config.seed, point, replication)
    sim = Simulator(logger=logger)
    collector = MetricsCollector(warmup_end=config.warmup_ns, logger=logger)
    topology = build_ring(config, sim, collector=collector, run_seed=run_seed, logger=logger)

    sim.register(collector.target, collector.handle)
    if config.warmup_ns > 0:
        sim.schedule(config.warmup_ns, EventKind.METRICS_FLUSH, collector.target)
    sim.add_snapshot("in_flight", topology.in_flight)
    topology.start()

    if logger:
        logger.log_debug(
            "Starting run",
            {"scheduler": config.scheduler, "point": point, "replication": replication},
        )
    report = sim.run(config.sim_limit_ns)

    measured = config.sim_limit_ns - config.warmup_ns
    scenario = config.echo()
    scenario.update(point=point, replication=replication)
    carryover = topology.carryover_count()
    result = ScenarioResult(
        scheduler=config.scheduler,
        point=point,
        replication=replication,
        run_seed=run_seed,
        clock=report.clock,
        events_processed=report.events_processed,
        class_rows=collector.class_rows(measured, carryover=carryover, scenario=scenario),
        per_stream=collector.stream_rows(measured),
        purge_count=topology.purge_count(),
        overflow_count=topology.overflow_count(),
        carryover_count=carryover,
        in_flight=report.snapshots["in_flight"],
        ledger={klass: dict(counts) for klass, counts in collector.ledger.items()},
        frames_transmitted=topology.frames_transmitted(),
        link_utilization=topology.link_utilization(report.clock),
    )

    if logger and hasattr(logger, "log_run_report"):
        logger.log_run_report(result)
    return result
