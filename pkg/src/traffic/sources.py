"""Traffic sources that inject frames into their gateway switch."""

from abc import ABC, abstractmethod
from typing import Any, Callable, Iterator, List, Optional

import numpy as np

from src.engine.event import Event, EventKind
from src.engine.simulator import Simulator
from src.network.models import Frame

from .models import StreamKind, StreamSpec

Injector = Callable[[Frame, int], None]


def periodic_emit(spec: StreamSpec, cycle_start: int, ids: Iterator[int]) -> List[Frame]:
    """Create the burst of frames a periodic stream sends at one cycle start."""
    if spec.kind is not StreamKind.PERIODIC:
        raise ValueError(f"Stream {spec.stream_id} is not periodic")
    return [_new_frame(spec, cycle_start, next(ids)) for _ in range(spec.frames_per_cycle)]


def sporadic_next_arrival(spec: StreamSpec, rng: np.random.Generator, now: int) -> int:
    """Time of the next sporadic arrival after ``now`` (exponential gap)."""
    if spec.kind is not StreamKind.SPORADIC:
        raise ValueError(f"Stream {spec.stream_id} is not sporadic")
    return now + int(round(rng.exponential(spec.mean_interarrival_ns)))


def _new_frame(spec: StreamSpec, now: int, frame_id: int) -> Frame:
    return Frame(
        id=frame_id,
        stream_id=spec.stream_id,
        klass=spec.klass,
        size_bytes=spec.frame_bytes,
        created_at=now,
        src_switch=spec.gateway,
        remaining_hops=spec.ttl,
    )


class TrafficSource(ABC):
    """A stream generator driven by its own SourceEmit events."""

    def __init__(
        self,
        spec: StreamSpec,
        sim: Simulator,
        inject: Injector,
        ids: Iterator[int],
        sim_limit_ns: int,
        on_sent: Optional[Callable[[Frame], None]] = None,
    ):
        self.spec = spec
        self.sim = sim
        self.inject = inject
        self.ids = ids
        self.on_sent = on_sent
        self.active_until = spec.active_until(sim_limit_ns)
        self.frames_sent = 0
        self.target = f"source:{spec.stream_id}"

    def start(self) -> None:
        """Register with the simulator and schedule the first emission."""
        self.sim.register(self.target, self.handle)
        first = self.first_emission()
        if first is not None:
            self.sim.schedule(first, EventKind.SOURCE_EMIT, self.target)

    def handle(self, event: Event) -> None:
        now = event.time
        if not self.may_emit(now):
            return
        for frame in self.emit(now):
            self.frames_sent += 1
            if self.on_sent:
                self.on_sent(frame)
            self.inject(frame, now)
        following = self.next_emission(now)
        if following is not None:
            self.sim.schedule(following, EventKind.SOURCE_EMIT, self.target)

    @abstractmethod
    def first_emission(self) -> Optional[int]:
        """Time of the first SourceEmit event, or None if the stream never emits."""

    @abstractmethod
    def may_emit(self, now: int) -> bool:
        """Whether an emission at ``now`` lies inside the active interval."""

    @abstractmethod
    def emit(self, now: int) -> List[Frame]:
        """Frames created at ``now``."""

    @abstractmethod
    def next_emission(self, now: int) -> Optional[int]:
        """Time of the emission following ``now``."""


class PeriodicSource(TrafficSource):
    """Emits a burst of frames at every cycle start (plus the phase offset).

    A burst at time t is sent only if the whole cycle [t, t + CT) lies within
    the active interval, so a source active for T emits floor(T/CT) bursts.
    """

    def first_emission(self) -> Optional[int]:
        cycle = self.spec.cycle_time_ns
        first_cycle = -(-self.spec.start_ns // cycle) * cycle
        first = first_cycle + self.spec.phase_offset_ns
        return first if self.may_emit(first) else None

    def may_emit(self, now: int) -> bool:
        return now + self.spec.cycle_time_ns <= self.active_until

    def emit(self, now: int) -> List[Frame]:
        return periodic_emit(self.spec, now, self.ids)

    def next_emission(self, now: int) -> Optional[int]:
        following = now + self.spec.cycle_time_ns
        return following if self.may_emit(following) else None


class SporadicSource(TrafficSource):
    """Poisson source: one frame per arrival, exponential interarrival times."""

    def __init__(self, *args: Any, rng: np.random.Generator, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self.rng = rng

    def first_emission(self) -> Optional[int]:
        first = sporadic_next_arrival(self.spec, self.rng, self.spec.start_ns)
        return first if self.may_emit(first) else None

    def may_emit(self, now: int) -> bool:
        return now < self.active_until

    def emit(self, now: int) -> List[Frame]:
        return [_new_frame(self.spec, now, next(self.ids))]

    def next_emission(self, now: int) -> Optional[int]:
        following = sporadic_next_arrival(self.spec, self.rng, now)
        return following if self.may_emit(following) else None
