"""Deterministic discrete-event kernel."""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

from .event import Event, EventKind, EventQueue

Handler = Callable[[Event], None]


class SimulationError(RuntimeError):
    """Logic fault inside a run (e.g. scheduling into the past); aborts the run."""


@dataclass(frozen=True)
class RunReport:
    """Outcome of ``Simulator.run``: final clock plus metrics snapshots."""

    clock: int
    events_processed: int
    snapshots: Dict[str, Any] = field(default_factory=dict)


class Simulator:
    """Integer-nanosecond simulation clock, event queue and run loop.

    Entities register a handler under a target identifier; every event popped
    from the queue is dispatched to the handler of its target.
    """

    def __init__(self, logger: Optional[Any] = None):
        """Initialize the simulator.

        Args:
            logger: Optional logger (SimLogger-compatible)
        """
        self.logger = logger
        self._queue = EventQueue()
        self._handlers: Dict[str, Handler] = {}
        self._snapshots: Dict[str, Callable[[], Any]] = {}
        self._now = 0
        self._seq = 0
        self.events_processed = 0

    @property
    def now(self) -> int:
        return self._now

    @property
    def pending_count(self) -> int:
        return len(self._queue)

    def register(self, target: str, handler: Handler) -> None:
        """Bind a target identifier to the callable handling its events."""
        if target in self._handlers:
            raise SimulationError(f"Target already registered: {target}")
        self._handlers[target] = handler

    def add_snapshot(self, name: str, provider: Callable[[], Any]) -> None:
        """Register a provider whose value is captured in the RunReport."""
        self._snapshots[name] = provider

    def schedule(self, time: int, kind: EventKind, target: str, payload: Any = None) -> Event:
        """Insert an event; the sequence number comes from the global counter.

        Raises:
            SimulationError: If ``time`` lies before the current clock
        """
        if time < self._now:
            raise SimulationError(
                f"Cannot schedule {kind.name} for {target} at {time}ns (clock is {self._now}ns)"
            )
        event = Event(time=time, kind=kind, seq=self._seq, target=target, payload=payload)
        self._seq += 1
        self._queue.push(event)
        return event

    def run(self, until: int) -> RunReport:
        """Process every event with ``time <= until`` in total order.

        The clock ends at ``until`` even if the queue empties earlier.

        Args:
            until: Simulation end time in nanoseconds

        Returns:
            RunReport with the snapshot of every registered provider
        """
        if until < self._now:
            raise SimulationError(f"Cannot run backwards to {until}ns (clock is {self._now}ns)")
        if not self._queue and self.logger:
            self.logger.log_warning("Run started with an empty event queue", {"until": until})

        queue = self._queue
        handlers = self._handlers
        processed = 0
        while queue and queue.peek().time <= until:
            event = queue.pop()
            self._now = event.time
            handler = handlers.get(event.target)
            if handler is None:
                raise SimulationError(f"No handler registered for target {event.target}")
            handler(event)
            processed += 1

        self._now = until
        self.events_processed += processed
        return RunReport(
            clock=self._now,
            events_processed=self.events_processed,
            snapshots={name: provider() for name, provider in self._snapshots.items()},
        )
