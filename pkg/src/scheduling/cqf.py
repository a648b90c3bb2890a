"""Cyclic Queuing and Forwarding with time-aware gating."""

from typing import List, Optional

from src.engine.event import EventKind
from src.network.models import Frame, TrafficClass

from .base import EgressScheduler, EnqueueResult, Gate, Timer, TimerOutcome
from .queues import BoundedQueue


class CqfScheduler(EgressScheduler):
    """Two alternating ST queues plus a BE queue behind a two-window gate.

    Cycles are network-synchronized and start at multiples of ``cycle_time``.
    The ST gate is open during ``[0, st_window)`` of every cycle and the BE gate
    during the remainder. ST frames received in cycle x are transmitted in
    cycle x+1; a transmission may only start if it completes before its window
    closes.
    """

    kind = "cqf"

    def __init__(self, cycle_time: int, st_window: int, queue_bits: int, link_rate_bps: int):
        """Initialize the CQF scheduler.

        Args:
            cycle_time: Cycle duration in nanoseconds
            st_window: Duration of the ST gate window at the start of each cycle
            queue_bits: Capacity of every queue in bits
            link_rate_bps: Rate of the attached link, for the guard band
        """
        super().__init__()
        if cycle_time <= 0:
            raise ValueError("Cycle time must be positive")
        if not 0 < st_window <= cycle_time:
            raise ValueError("ST window must be positive and no longer than the cycle time")
        self.cycle_time = cycle_time
        self.st_window = st_window
        self.link_rate_bps = link_rate_bps
        self.st_queues = (BoundedQueue(queue_bits, "A"), BoundedQueue(queue_bits, "B"))
        self.be_queue = BoundedQueue(queue_bits, "BE")
        self.cycle_index = 0
        self.gate = Gate.ST_OPEN

    @property
    def enqueue_queue(self) -> BoundedQueue:
        return self.st_queues[self.cycle_index % 2]

    @property
    def dequeue_queue(self) -> BoundedQueue:
        return self.st_queues[(self.cycle_index + 1) % 2]

    @property
    def cycle_start(self) -> int:
        return self.cycle_index * self.cycle_time

    def gate_at(self, now: int) -> Gate:
        """Gate state implied by the time of day."""
        return Gate.ST_OPEN if now % self.cycle_time < self.st_window else Gate.BE_OPEN

    def tx_time(self, frame: Frame) -> int:
        return -(-frame.size_bytes * 8 * 1_000_000_000 // self.link_rate_bps)

    def window_end(self) -> int:
        """End of the currently open gate window."""
        if self.gate is Gate.ST_OPEN:
            return self.cycle_start + self.st_window
        return self.cycle_start + self.cycle_time

    def enqueue(self, frame: Frame, now: int) -> EnqueueResult:
        """ST goes to the enqueue queue of the current cycle, BE to the BE queue."""
        target = self.enqueue_queue if frame.klass is TrafficClass.ST else self.be_queue
        if not target.push(frame):
            self.overflow_drops += 1
            return EnqueueResult.DROPPED
        return EnqueueResult.ACCEPTED

    def select(self, now: int) -> Optional[Frame]:
        queue = self.dequeue_queue if self.gate is Gate.ST_OPEN else self.be_queue
        return self._pop_if_fits(queue, now)

    def _pop_if_fits(self, queue: BoundedQueue, now: int) -> Optional[Frame]:
        head = queue.head()
        if head is None or now + self.tx_time(head) > self.window_end():
            return None
        return queue.pop()

    def rollover(self, now: int) -> None:
        """Start the next cycle: swap queue roles and reopen the ST gate.

        Frames left in the finished dequeue queue stay queued and are sent two
        cycles later; they are counted as carryover.
        """
        self.carryover += len(self.dequeue_queue)
        self.cycle_index += 1
        self.gate = Gate.ST_OPEN

    def initial_timers(self) -> List[Timer]:
        timers = [(self.cycle_time, EventKind.CYCLE_ROLLOVER)]
        if self.st_window < self.cycle_time:
            timers.append((self.st_window, EventKind.GATE_CHANGE))
        return timers

    def on_timer(self, kind: EventKind, now: int) -> TimerOutcome:
        if kind is EventKind.GATE_CHANGE:
            self.gate = Gate.BE_OPEN
            return TimerOutcome()
        if kind is EventKind.CYCLE_ROLLOVER:
            self.rollover(now)
            timers = [(now + self.cycle_time, EventKind.CYCLE_ROLLOVER)]
            if self.st_window < self.cycle_time:
                timers.append((now + self.st_window, EventKind.GATE_CHANGE))
            return TimerOutcome(next_timers=timers)
        raise ValueError(f"CQF does not handle {kind.name} timers")

    def queued_frames(self) -> int:
        return sum(len(q) for q in self.st_queues) + len(self.be_queue)
