"""Online delay, jitter, throughput and loss statistics."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from src.network.models import Frame


class DropSite(str, Enum):
    """Where a frame was lost."""

    OVERFLOW = "overflow"
    PURGE = "purge"


@dataclass(frozen=True)
class MetricsRow:
    """Finalized statistics of one traffic class (or stream) for one run."""

    klass: str
    count: int
    mean_delay_ns: Optional[float]
    min_delay_ns: Optional[int]
    max_delay_ns: Optional[int]
    jitter_ns: Optional[float]
    throughput_bps: float
    loss_ratio: float
    purge_drops: int
    overflow_drops: int
    carryover_count: int
    scenario: Dict[str, Any] = field(default_factory=dict)


@dataclass
class ClassStats:
    """Running accumulator for one traffic class or stream.

    Mean and variance use Welford's one-pass update. Deliveries before
    ``warmup_end`` are ignored; frames created before it do not count as sent
    or dropped.
    """

    warmup_end: int = 0
    count: int = 0
    mean_delay: float = 0.0
    m2: float = 0.0
    min_delay: Optional[int] = None
    max_delay: Optional[int] = None
    bits_delivered: int = 0
    frames_sent: int = 0
    frames_dropped: int = 0
    drops_by_site: Dict[DropSite, int] = field(
        default_factory=lambda: {site: 0 for site in DropSite}
    )

    def record_sent(self, frame: Frame) -> None:
        if frame.created_at >= self.warmup_end:
            self.frames_sent += 1

    def record_delivery(self, record: Any, now: int) -> None:
        """Fold one delivery into the accumulators.

        Args:
            record: DeliveryRecord of the delivered frame
            now: Delivery time
        """
        if now < self.warmup_end:
            return
        delay = record.delay_ns
        self.count += 1
        delta = delay - self.mean_delay
        self.mean_delay += delta / self.count
        self.m2 += delta * (delay - self.mean_delay)
        self.min_delay = delay if self.min_delay is None else min(self.min_delay, delay)
        self.max_delay = delay if self.max_delay is None else max(self.max_delay, delay)
        self.bits_delivered += record.bits

    def record_drop(self, frame: Frame, site: DropSite) -> None:
        if frame.created_at < self.warmup_end:
            return
        self.frames_dropped += 1
        self.drops_by_site[site] += 1

    @property
    def jitter(self) -> Optional[float]:
        """Population standard deviation of the delay."""
        if self.count == 0:
            return None
        return math.sqrt(max(self.m2, 0.0) / self.count)

    @property
    def loss_ratio(self) -> float:
        if self.frames_sent == 0:
            return 0.0
        return min(self.frames_dropped / self.frames_sent, 1.0)

    def finalize(
        self,
        klass: str,
        measured_interval: int,
        carryover: int = 0,
        scenario: Optional[Dict[str, Any]] = None,
    ) -> MetricsRow:
        """Turn the accumulators into a MetricsRow.

        Args:
            klass: Label of the class or stream
            measured_interval: Length of the measured interval in nanoseconds
            carryover: Carryover count attributed to this row
            scenario: Scenario echo values for the row

        Raises:
            ValueError: If the measured interval is not positive
        """
        if measured_interval <= 0:
            raise ValueError(f"Measured interval must be positive, got {measured_interval}")
        has_samples = self.count > 0
        return MetricsRow(
            klass=klass,
            count=self.count,
            mean_delay_ns=self.mean_delay if has_samples else None,
            min_delay_ns=self.min_delay,
            max_delay_ns=self.max_delay,
            jitter_ns=self.jitter,
            throughput_bps=self.bits_delivered * 1_000_000_000 / measured_interval,
            loss_ratio=self.loss_ratio,
            purge_drops=self.drops_by_site[DropSite.PURGE],
            overflow_drops=self.drops_by_site[DropSite.OVERFLOW],
            carryover_count=carryover,
            scenario=dict(scenario or {}),
        )
