"""Data models for traffic streams."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.network.models import TrafficClass


class StreamKind(str, Enum):
    """Emission pattern of a stream."""

    PERIODIC = "periodic"
    SPORADIC = "sporadic"


@dataclass(frozen=True)
class StreamSpec:
    """Static description of one traffic stream.

    Periodic streams emit ``frames_per_cycle`` frames at every cycle start;
    sporadic streams emit single frames with exponential interarrival times
    whose mean gives ``intensity_bps`` on average.
    """

    stream_id: int
    klass: TrafficClass
    kind: StreamKind
    frame_bytes: int
    gateway: int
    ttl: int
    frames_per_cycle: int = 0
    intensity_bps: int = 0
    cycle_time_ns: int = 0
    phase_offset_ns: int = 0
    start_ns: int = 0
    duration_ns: Optional[int] = None
    hurst: float = 0.5

    def __post_init__(self):
        """Validate stream parameters after initialization."""
        if self.frame_bytes <= 0:
            raise ValueError(f"Invalid frame_bytes: {self.frame_bytes}. Must be positive")
        if self.ttl < 1:
            raise ValueError(f"Invalid ttl: {self.ttl}. Must be at least 1")
        if self.kind is StreamKind.PERIODIC:
            if self.frames_per_cycle < 1:
                raise ValueError("Periodic streams need at least one frame per cycle")
            if self.cycle_time_ns <= 0:
                raise ValueError("Periodic streams need a positive cycle time")
        elif self.intensity_bps <= 0:
            raise ValueError("Sporadic streams need a positive intensity")
        if self.hurst != 0.5:
            raise ValueError(f"Unsupported Hurst parameter {self.hurst}; only 0.5 is modelled")
        if self.start_ns < 0:
            raise ValueError("Stream start cannot be negative")
        if self.duration_ns is not None and self.duration_ns <= 0:
            raise ValueError("Stream duration must be positive")

    @property
    def frame_bits(self) -> int:
        return self.frame_bytes * 8

    @property
    def mean_interarrival_ns(self) -> float:
        """Mean gap between sporadic frames in nanoseconds."""
        return self.frame_bits * 1_000_000_000 / self.intensity_bps

    def active_until(self, sim_limit_ns: int) -> int:
        """End of the emission interval, clipped to the simulation limit."""
        if self.duration_ns is None:
            return sim_limit_ns
        return min(self.start_ns + self.duration_ns, sim_limit_ns)
