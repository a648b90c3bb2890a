"""Paternoster scheduling: four rotating queues with per-epoch reservation."""

from typing import List, Optional

from src.engine.event import EventKind
from src.network.models import Frame, TrafficClass

from .base import EgressScheduler, EnqueueResult, Timer, TimerOutcome
from .queues import BoundedQueue

PRIOR, CURRENT, NEXT, LAST = range(4)
ROLE_NAMES = ("prior", "current", "next", "last")

_ADMISSION_RESULTS = {
    CURRENT: EnqueueResult.TO_CURRENT,
    NEXT: EnqueueResult.TO_NEXT,
    LAST: EnqueueResult.TO_LAST,
}


class PaternosterScheduler(EgressScheduler):
    """Unsynchronized CQF variant with prior/current/next/last queues.

    Roles rotate over the four physical queues at every epoch rollover; the
    storage never moves. ST frames are admitted to the first of current, next
    and last that still has reservation left. Whatever remains in the prior
    queue when its epoch ends is purged and registered as lost. BE frames get
    the leftover bandwidth; there is no gate.
    """

    kind = "paternoster"

    def __init__(
        self,
        epoch: int,
        reservation_bits: int,
        queue_bits: int,
        phase: int = 0,
    ):
        """Initialize the Paternoster scheduler.

        Args:
            epoch: Epoch duration in nanoseconds
            reservation_bits: ST bits admissible per queue and epoch
            queue_bits: Capacity of every queue in bits
            phase: Offset of this port's epoch boundaries in ``[0, epoch)``
        """
        super().__init__()
        if epoch <= 0:
            raise ValueError("Epoch duration must be positive")
        if reservation_bits <= 0:
            raise ValueError("Reservation must be positive")
        if not 0 <= phase < epoch:
            raise ValueError(f"Epoch phase {phase} outside [0, {epoch})")
        self.epoch = epoch
        self.reservation_bits = reservation_bits
        self.phase = phase
        self.queues = [BoundedQueue(queue_bits, f"Q{i}") for i in range(4)]
        self.admitted_bits = [0, 0, 0, 0]
        # roles[r] is the physical queue currently holding role r
        self.roles = [0, 1, 2, 3]
        self.be_queue = BoundedQueue(queue_bits, "BE")
        self.epoch_index = 0

    def queue_for(self, role: int) -> BoundedQueue:
        return self.queues[self.roles[role]]

    def admitted_for(self, role: int) -> int:
        return self.admitted_bits[self.roles[role]]

    @property
    def serving_prior(self) -> bool:
        return bool(self.queue_for(PRIOR))

    def enqueue(self, frame: Frame, now: int) -> EnqueueResult:
        if frame.klass is TrafficClass.BE:
            if not self.be_queue.push(frame):
                self.overflow_drops += 1
                return EnqueueResult.DROPPED
            return EnqueueResult.ACCEPTED

        bits = frame.bits
        for role in (CURRENT, NEXT, LAST):
            physical = self.roles[role]
            queue = self.queues[physical]
            if self.admitted_bits[physical] + bits > self.reservation_bits:
                continue
            if not queue.push(frame):
                continue
            self.admitted_bits[physical] += bits
            return _ADMISSION_RESULTS[role]

        self.overflow_drops += 1
        return EnqueueResult.DROPPED

    def select(self, now: int) -> Optional[Frame]:
        for queue in (self.queue_for(PRIOR), self.queue_for(CURRENT), self.be_queue):
            if queue:
                return queue.pop()
        return None

    def rollover(self, now: int) -> List[Frame]:
        """Rotate the roles and purge whatever the old prior queue still holds.

        current becomes prior, next becomes current, last becomes next and the
        old prior storage, emptied, becomes the new last.

        Returns:
            The purged frames
        """
        old_prior = self.roles[PRIOR]
        purged = self.queues[old_prior].clear()
        self.roles = self.roles[1:] + [old_prior]
        self.admitted_bits[old_prior] = 0
        self.purge_drops += len(purged)
        self.epoch_index += 1
        return purged

    def first_rollover(self) -> int:
        return self.phase if self.phase > 0 else self.epoch

    def initial_timers(self) -> List[Timer]:
        return [(self.first_rollover(), EventKind.EPOCH_ROLLOVER)]

    def on_timer(self, kind: EventKind, now: int) -> TimerOutcome:
        if kind is not EventKind.EPOCH_ROLLOVER:
            raise ValueError(f"Paternoster does not handle {kind.name} timers")
        purged = self.rollover(now)
        return TimerOutcome(
            purged=purged, next_timers=[(now + self.epoch, EventKind.EPOCH_ROLLOVER)]
        )

    def queued_frames(self) -> int:
        return sum(len(q) for q in self.queues) + len(self.be_queue)

    def role_table(self) -> dict:
        """Physical queue name per role, for diagnostics."""
        return {name: self.queues[self.roles[r]].name for r, name in enumerate(ROLE_NAMES)}
