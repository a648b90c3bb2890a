"""Data models for frames and links."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class TrafficClass(str, Enum):
    """Traffic class of a frame or stream."""

    ST = "ST"
    BE = "BE"


@dataclass(slots=True)
class Frame:
    """A unit of traffic travelling store-and-forward around the ring."""

    id: int
    stream_id: int
    klass: TrafficClass
    size_bytes: int
    created_at: int
    src_switch: int
    remaining_hops: int
    sender_cycle_index: Optional[int] = None

    def __post_init__(self):
        """Validate frame fields after initialization."""
        if self.size_bytes <= 0:
            raise ValueError(f"Invalid size_bytes: {self.size_bytes}. Must be positive")
        if self.remaining_hops < 0:
            raise ValueError(f"Invalid remaining_hops: {self.remaining_hops}. Cannot be negative")
        if self.created_at < 0:
            raise ValueError(f"Invalid created_at: {self.created_at}. Cannot be negative")

    @property
    def bits(self) -> int:
        return self.size_bytes * 8


@dataclass(frozen=True)
class Link:
    """Unidirectional switch-to-switch link."""

    src_switch: int
    dst_switch: int
    prop_delay_ns: int
    rate_bps: int = 1_000_000_000

    def __post_init__(self):
        """Validate link parameters after initialization."""
        if self.rate_bps <= 0:
            raise ValueError(f"Invalid rate_bps: {self.rate_bps}. Must be positive")
        if self.prop_delay_ns < 0:
            raise ValueError(f"Invalid prop_delay_ns: {self.prop_delay_ns}. Cannot be negative")

    def tx_time_ns(self, size_bytes: int) -> int:
        """Serialization time of a frame, rounded up to whole nanoseconds.

        Preamble and inter-frame gap are not modelled.
        """
        return -(-size_bytes * 8 * 1_000_000_000 // self.rate_bps)
