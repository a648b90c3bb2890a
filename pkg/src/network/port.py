"""Egress port: one scheduler driving one outgoing link."""

from typing import Any, Callable, Optional

from src.engine.event import Event, EventKind
from src.engine.simulator import SimulationError, Simulator
from src.metrics.stats import DropSite
from src.scheduling.base import EgressScheduler, EnqueueResult

from .models import Frame, Link

DropHandler = Callable[[Frame, DropSite], None]


class EgressPort:
    """Couples a scheduler with its link and the simulator.

    Whenever the scheduler state may have changed (timer, enqueue, end of a
    transmission) an idle port asks the scheduler for the next frame and puts
    it on the wire.
    """

    def __init__(
        self,
        index: int,
        link: Link,
        scheduler: EgressScheduler,
        sim: Simulator,
        on_drop: Optional[DropHandler] = None,
        logger: Optional[Any] = None,
    ):
        """Initialize the egress port.

        Args:
            index: Index of the owning switch
            link: Outgoing link
            scheduler: Scheduler state machine owned by this port
            sim: Simulator the port schedules its events on
            on_drop: Callback receiving every dropped or purged frame
            logger: Optional logger
        """
        self.index = index
        self.link = link
        self.scheduler = scheduler
        self.sim = sim
        self.on_drop = on_drop
        self.logger = logger
        self.target = f"port:{index}"
        self.busy = False
        self.busy_until = 0
        self.frames_transmitted = 0
        self.bits_transmitted = 0
        self.frames_on_wire = 0

    def start(self) -> None:
        """Register with the simulator and arm the scheduler's first timers."""
        self.sim.register(self.target, self.handle)
        for time, kind in self.scheduler.initial_timers():
            self.sim.schedule(time, kind, self.target)

    def handle(self, event: Event) -> None:
        if event.kind is EventKind.TX_COMPLETE:
            self.busy = False
        else:
            outcome = self.scheduler.on_timer(event.kind, event.time)
            if outcome.purged:
                if self.logger:
                    self.logger.log_debug(
                        "Purged stale prior queue",
                        {"port": self.index, "t_ns": event.time, "frames": len(outcome.purged)},
                    )
                for frame in outcome.purged:
                    self._drop(frame, DropSite.PURGE)
            for time, kind in outcome.next_timers:
                self.sim.schedule(time, kind, self.target)
        self.try_transmit(event.time)

    def enqueue(self, frame: Frame, now: int) -> EnqueueResult:
        result = self.scheduler.enqueue(frame, now)
        if result is EnqueueResult.DROPPED:
            self._drop(frame, DropSite.OVERFLOW)
        self.try_transmit(now)
        return result

    def try_transmit(self, now: int) -> None:
        if self.busy:
            return
        frame = self.scheduler.select(now)
        if frame is not None:
            self.transmit(frame, now)

    def transmit(self, frame: Frame, start: int) -> None:
        """Serialize a frame onto the link.

        TxComplete fires after the transmission time, the downstream arrival
        after the additional propagation delay.
        """
        if self.busy or start < self.busy_until:
            raise SimulationError(
                f"Port {self.index} asked to transmit at {start}ns while busy "
                f"until {self.busy_until}ns"
            )
        tx_time = self.link.tx_time_ns(frame.size_bytes)
        self.scheduler.on_transmit(frame, start)
        self.busy = True
        self.busy_until = start + tx_time
        self.frames_transmitted += 1
        self.bits_transmitted += frame.bits
        self.frames_on_wire += 1
        self.sim.schedule(self.busy_until, EventKind.TX_COMPLETE, self.target)
        self.sim.schedule(
            self.busy_until + self.link.prop_delay_ns,
            EventKind.FRAME_ARRIVAL,
            f"switch:{self.link.dst_switch}",
            frame,
        )

    def _drop(self, frame: Frame, site: DropSite) -> None:
        if self.on_drop:
            self.on_drop(frame, site)
