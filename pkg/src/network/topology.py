"""Unidirectional switch ring with sources and sinks at every switch."""

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.config.models import ScenarioConfig, SweepRange
from src.engine.event import Event, EventKind
from src.engine.simulator import SimulationError, Simulator
from src.network.models import Frame, Link, TrafficClass
from src.scheduling.scheduler_factory import SchedulerFactory
from src.traffic.models import StreamKind, StreamSpec
from src.traffic.rng import phase_rng, stream_rng
from src.traffic.sink import Sink
from src.traffic.sources import PeriodicSource, SporadicSource, TrafficSource

from .port import EgressPort


class Switch:
    """A ring switch: one egress toward the next switch, one sink, local sources."""

    def __init__(self, index: int, egress: EgressPort, sink: Sink, sim: Simulator):
        self.index = index
        self.egress = egress
        self.sink = sink
        self.sim = sim
        self.upstream: Optional[EgressPort] = None
        self.attached_sources: List[str] = []
        self.target = f"switch:{index}"

    def handle(self, event: Event) -> None:
        if event.kind is not EventKind.FRAME_ARRIVAL:
            raise SimulationError(f"Switch {self.index} cannot handle {event.kind.name}")
        if self.upstream is not None:
            self.upstream.frames_on_wire -= 1
        self.ingest(event.payload, event.time)

    def inject(self, frame: Frame, now: int) -> None:
        """Entry point for frames created by a source attached to this switch."""
        self.egress.scheduler.stamp_injection(frame, now)
        self.ingest(frame, now)

    def ingest(self, frame: Frame, now: int) -> None:
        """Deliver a frame with no hops left, otherwise forward it one hop."""
        if frame.remaining_hops == 0:
            self.sink.receive(frame, now)
            return
        frame.remaining_hops -= 1
        self.egress.enqueue(frame, now)


@dataclass
class RingTopology:
    """Switches connected i -> (i+1) mod N, plus their traffic sources."""

    switches: List[Switch]
    links: List[Link]
    sources: List[TrafficSource] = field(default_factory=list)

    @property
    def ports(self) -> List[EgressPort]:
        return [switch.egress for switch in self.switches]

    def start(self) -> None:
        """Register every entity and schedule the initial timers and emissions."""
        for switch in self.switches:
            switch.sim.register(switch.target, switch.handle)
            switch.egress.start()
        for source in self.sources:
            source.start()

    def in_flight(self) -> int:
        """Frames queued at a port, being transmitted or propagating on a link."""
        return sum(port.scheduler.queued_frames() + port.frames_on_wire for port in self.ports)

    def purge_count(self) -> int:
        return sum(port.scheduler.purge_drops for port in self.ports)

    def overflow_count(self) -> int:
        return sum(port.scheduler.overflow_drops for port in self.ports)

    def carryover_count(self) -> int:
        return sum(port.scheduler.carryover for port in self.ports)

    def frames_transmitted(self) -> int:
        return sum(port.frames_transmitted for port in self.ports)

    def link_utilization(self, elapsed_ns: int) -> Dict[int, float]:
        """Share of ``elapsed_ns`` each link spent serializing, keyed by source switch."""
        if elapsed_ns <= 0:
            return {port.index: 0.0 for port in self.ports}
        return {
            port.index: port.bits_transmitted * 1_000_000_000 / (port.link.rate_bps * elapsed_ns)
            for port in self.ports
        }


def streams_on_link(switches: int, ttl: int) -> Dict[int, List[int]]:
    """Gateways of the streams crossing each link, by brute-force path walk.

    Link i connects switch i to switch (i+1) mod N.
    """
    crossing: Dict[int, List[int]] = {link: [] for link in range(switches)}
    for gateway in range(switches):
        for hop in range(ttl):
            crossing[(gateway + hop) % switches].append(gateway)
    return crossing


def _scalar(config: ScenarioConfig, key: str) -> int:
    value = getattr(config, key)
    if isinstance(value, SweepRange):
        raise ValueError(f"build_ring needs a single sweep point; {key} is a range")
    return value


def _stream_specs(config: ScenarioConfig, gateway: int) -> List[StreamSpec]:
    n = config.switches
    periodic = config.st_kind == StreamKind.PERIODIC.value
    specs = [
        StreamSpec(
            stream_id=gateway,
            klass=TrafficClass.ST,
            kind=StreamKind.PERIODIC if periodic else StreamKind.SPORADIC,
            frame_bytes=config.st_frame_bytes,
            gateway=gateway,
            ttl=config.ttl,
            frames_per_cycle=_scalar(config, "pi") if periodic else 0,
            intensity_bps=0 if periodic else _scalar(config, "st_intensity_bps"),
            cycle_time_ns=config.cycle_time_ns,
            phase_offset_ns=config.source_phase_offset_ns,
            duration_ns=config.stream_duration_ns,
            hurst=config.hurst,
        )
    ]
    if config.be_intensity_bps > 0:
        specs.append(
            StreamSpec(
                stream_id=n + gateway,
                klass=TrafficClass.BE,
                kind=StreamKind.SPORADIC,
                frame_bytes=config.be_frame_bytes,
                gateway=gateway,
                ttl=config.ttl,
                intensity_bps=config.be_intensity_bps,
                hurst=config.hurst,
            )
        )
    return specs


def build_ring(
    config: ScenarioConfig,
    sim: Simulator,
    collector: Optional[Any] = None,
    run_seed: int = 0,
    logger: Optional[Any] = None,
) -> RingTopology:
    """Build the ring for one scenario point.

    Every switch gets an egress port with the configured scheduler, a sink, an
    ST source and (unless BE is disabled) a BE source. ST stream ids equal the
    gateway index, BE stream ids are offset by the number of switches.

    Args:
        config: Validated scenario configuration with scalar sweep keys
        sim: Simulator the entities are registered on
        collector: Optional MetricsCollector receiving sent, delivered and dropped frames
        run_seed: Seed of this run, used for source draws and epoch phases
        logger: Optional logger

    Returns:
        RingTopology ready to ``start``

    Raises:
        ValueError: If the ring has fewer than 2 switches or a sweep key is a range
    """
    n = config.switches
    if n < 2:
        raise ValueError(f"A ring needs at least 2 switches, got {n}")
    prop_delay = _scalar(config, "prop_delay_ns")

    on_drop = collector.record_drop if collector else None
    on_sent = collector.record_sent if collector else None
    links = [
        Link(
            src_switch=i,
            dst_switch=(i + 1) % n,
            prop_delay_ns=prop_delay,
            rate_bps=config.link_rate_bps,
        )
        for i in range(n)
    ]

    switches = []
    for i, link in enumerate(links):
        phase = 0
        if config.scheduler == "paternoster":
            phase = int(phase_rng(run_seed, i).integers(0, config.epoch_ns))
        scheduler = SchedulerFactory.create_scheduler(config.scheduler, config, phase=phase)
        port = EgressPort(i, link, scheduler, sim, on_drop=on_drop, logger=logger)
        switches.append(Switch(i, port, Sink(i, collector), sim))
    for i, switch in enumerate(switches):
        switch.upstream = switches[(i - 1) % n].egress

    frame_ids = itertools.count()
    sources: List[TrafficSource] = []
    for switch in switches:
        for spec in _stream_specs(config, switch.index):
            common = dict(
                spec=spec,
                sim=sim,
                inject=switch.inject,
                ids=frame_ids,
                sim_limit_ns=config.sim_limit_ns,
                on_sent=on_sent,
            )
            if spec.kind is StreamKind.PERIODIC:
                source = PeriodicSource(**common)
            else:
                source = SporadicSource(**common, rng=stream_rng(run_seed, spec.stream_id))
            sources.append(source)
            switch.attached_sources.append(source.target)

    if logger:
        logger.log_debug(
            "Ring built",
            {
                "switches": n,
                "scheduler": config.scheduler,
                "sources": len(sources),
                "prop_ns": prop_delay,
            },
        )
    return RingTopology(switches=switches, links=links, sources=sources)
