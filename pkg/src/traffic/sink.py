"""Per-switch sinks turning delivered frames into delivery records."""

from dataclasses import dataclass
from typing import Any, Optional

from src.engine.simulator import SimulationError
from src.network.models import Frame, TrafficClass


@dataclass(frozen=True)
class DeliveryRecord:
    """A frame reaching its destination sink."""

    stream_id: int
    klass: TrafficClass
    delay_ns: int
    bits: int
    delivered_at: int


def sink_receive(frame: Frame, now: int) -> DeliveryRecord:
    """Build the delivery record of a frame that reached its sink.

    Raises:
        SimulationError: If the frame still has hops left or the delay is negative
    """
    if frame.remaining_hops != 0:
        raise SimulationError(
            f"Frame {frame.id} reached a sink with {frame.remaining_hops} hops left"
        )
    delay = now - frame.created_at
    if delay < 0:
        raise SimulationError(f"Frame {frame.id} delivered {-delay}ns before it was created")
    return DeliveryRecord(
        stream_id=frame.stream_id,
        klass=frame.klass,
        delay_ns=delay,
        bits=frame.bits,
        delivered_at=now,
    )


class Sink:
    """Destination of every stream whose path ends at this switch."""

    def __init__(self, switch_index: int, collector: Optional[Any] = None):
        self.switch_index = switch_index
        self.collector = collector
        self.delivered = 0

    def receive(self, frame: Frame, now: int) -> DeliveryRecord:
        record = sink_receive(frame, now)
        self.delivered += 1
        if self.collector:
            self.collector.record_delivery(record, now)
        return record
