"""Simulation events and the ordered event queue."""

import heapq
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, List, Optional, Tuple


class EventKind(IntEnum):
    """Event kinds; the value is the tie-break rank at equal timestamps.

    Gate, cycle and epoch changes rank before arrivals so that a frame arriving
    exactly on a boundary belongs to the new cycle.
    """

    GATE_CHANGE = 0
    CYCLE_ROLLOVER = 1
    EPOCH_ROLLOVER = 2
    SOURCE_EMIT = 3
    FRAME_ARRIVAL = 4
    TX_COMPLETE = 5
    METRICS_FLUSH = 6


@dataclass(frozen=True, slots=True)
class Event:
    """A timestamped simulation occurrence addressed to one entity."""

    time: int
    kind: EventKind
    seq: int
    target: str
    payload: Any = None

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        """Total order key: (time, kind rank, insertion sequence)."""
        return (self.time, int(self.kind), self.seq)


class EventQueue:
    """Priority queue of events ordered by ``Event.sort_key``."""

    def __init__(self):
        self._heap: List[Tuple[int, int, int, Event]] = []

    def push(self, event: Event) -> None:
        heapq.heappush(self._heap, (event.time, int(event.kind), event.seq, event))

    def pop(self) -> Event:
        return heapq.heappop(self._heap)[3]

    def peek(self) -> Optional[Event]:
        return self._heap[0][3] if self._heap else None

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)
