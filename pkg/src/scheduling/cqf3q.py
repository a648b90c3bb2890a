"""Experimental three-queue CQF with a waiting queue for late frames."""

from typing import Optional

from src.network.models import Frame, TrafficClass

from .base import EnqueueResult, Gate
from .cqf import CqfScheduler
from .queues import BoundedQueue


class Cqf3qScheduler(CqfScheduler):
    """CQF plus a waiting queue for frames received in the wrong cycle.

    Every ST frame carries the cycle index in which its upstream port started
    sending it. A frame whose stamp differs from the local cycle at arrival
    (long propagation delay pushed it across a boundary) goes to the waiting
    queue. During the ST window the dequeue queue has strict priority over the
    waiting queue; the BE window and guard band are those of CQF.

    Only the strict-priority service rule is modelled. Dead time and
    cycle-misalignment handling are left open.
    """

    kind = "cqf3q"

    def __init__(self, cycle_time: int, st_window: int, queue_bits: int, link_rate_bps: int):
        super().__init__(cycle_time, st_window, queue_bits, link_rate_bps)
        self.waiting = BoundedQueue(queue_bits, "W")
        self.to_waiting = 0

    def stamp(self, frame: Frame) -> None:
        frame.sender_cycle_index = self.cycle_index

    def on_transmit(self, frame: Frame, now: int) -> None:
        self.stamp(frame)

    def stamp_injection(self, frame: Frame, now: int) -> None:
        self.stamp(frame)

    def enqueue(self, frame: Frame, now: int) -> EnqueueResult:
        if frame.klass is TrafficClass.BE:
            return super().enqueue(frame, now)

        on_time = frame.sender_cycle_index in (None, self.cycle_index)
        target = self.enqueue_queue if on_time else self.waiting
        if not target.push(frame):
            self.overflow_drops += 1
            return EnqueueResult.DROPPED
        if on_time:
            return EnqueueResult.TO_ENQ
        self.to_waiting += 1
        return EnqueueResult.TO_WAITING

    def select(self, now: int) -> Optional[Frame]:
        if self.gate is Gate.BE_OPEN:
            return self._pop_if_fits(self.be_queue, now)
        if self.dequeue_queue:
            return self._pop_if_fits(self.dequeue_queue, now)
        return self._pop_if_fits(self.waiting, now)

    def queued_frames(self) -> int:
        return super().queued_frames() + len(self.waiting)
