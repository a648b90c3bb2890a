"""Base interface for all egress-port schedulers."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.engine.event import EventKind
from src.network.models import Frame


class EnqueueResult(Enum):
    """Outcome of offering a frame to a scheduler."""

    ACCEPTED = "accepted"
    TO_CURRENT = "to_current"
    TO_NEXT = "to_next"
    TO_LAST = "to_last"
    TO_ENQ = "to_enq"
    TO_WAITING = "to_waiting"
    DROPPED = "dropped"


class Gate(Enum):
    """Time-aware shaper gate state within a cycle."""

    ST_OPEN = "st_open"
    BE_OPEN = "be_open"


Timer = Tuple[int, EventKind]


@dataclass
class TimerOutcome:
    """Result of a scheduler timer: purged frames and the timers to arm next."""

    purged: List[Frame] = field(default_factory=list)
    next_timers: List[Timer] = field(default_factory=list)


class EgressScheduler(ABC):
    """Abstract scheduler state machine owned by one egress port."""

    kind: str = ""

    def __init__(self):
        self.overflow_drops = 0
        self.purge_drops = 0
        self.carryover = 0

    @abstractmethod
    def enqueue(self, frame: Frame, now: int) -> EnqueueResult:
        """Offer a received frame; DROPPED means the frame was lost."""

    @abstractmethod
    def select(self, now: int) -> Optional[Frame]:
        """Pop the next frame to transmit on an idle port, if any may start now."""

    @abstractmethod
    def initial_timers(self) -> List[Timer]:
        """Timers to arm at simulation start."""

    @abstractmethod
    def on_timer(self, kind: EventKind, now: int) -> TimerOutcome:
        """Handle a gate, cycle or epoch timer."""

    @abstractmethod
    def queued_frames(self) -> int:
        """Number of frames currently held in any queue."""

    def on_transmit(self, frame: Frame, now: int) -> None:
        """Hook called when a frame starts transmission."""

    def stamp_injection(self, frame: Frame, now: int) -> None:
        """Hook called when a local source injects a frame at its gateway."""
