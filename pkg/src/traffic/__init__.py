"""Traffic sources, sinks and seeded random substreams."""

from .models import StreamKind, StreamSpec
from .rng import derive_run_seed, phase_rng, stream_rng
from .sink import DeliveryRecord, Sink, sink_receive
from .sources import (
    PeriodicSource,
    SporadicSource,
    TrafficSource,
    periodic_emit,
    sporadic_next_arrival,
)

__all__ = [
    "DeliveryRecord",
    "PeriodicSource",
    "Sink",
    "SporadicSource",
    "StreamKind",
    "StreamSpec",
    "TrafficSource",
    "derive_run_seed",
    "periodic_emit",
    "phase_rng",
    "sink_receive",
    "sporadic_next_arrival",
    "stream_rng",
]
