"""Routes deliveries, drops and sent counts into per-class and per-stream stats."""

from typing import Any, Dict, List, Optional

from src.engine.event import Event
from src.network.models import Frame, TrafficClass

from .stats import ClassStats, DropSite, MetricsRow

LEDGER_FIELDS = ("injected", "delivered", "dropped")


class MetricsCollector:
    """Per-run statistics of every traffic class and stream.

    Besides the warm-up-filtered ClassStats it keeps a raw ledger of injected,
    delivered and dropped frames per class for conservation checks.
    """

    target = "metrics"

    def __init__(self, warmup_end: int = 0, logger: Optional[Any] = None):
        self.warmup_end = warmup_end
        self.logger = logger
        self.class_stats: Dict[TrafficClass, ClassStats] = {
            klass: ClassStats(warmup_end=warmup_end) for klass in TrafficClass
        }
        self.stream_stats: Dict[int, ClassStats] = {}
        self.stream_classes: Dict[int, TrafficClass] = {}
        self.ledger: Dict[str, Dict[str, int]] = {
            klass.value: dict.fromkeys(LEDGER_FIELDS, 0) for klass in TrafficClass
        }

    def _stream(self, stream_id: int, klass: TrafficClass) -> ClassStats:
        stats = self.stream_stats.get(stream_id)
        if stats is None:
            stats = self.stream_stats[stream_id] = ClassStats(warmup_end=self.warmup_end)
            self.stream_classes[stream_id] = klass
        return stats

    def record_sent(self, frame: Frame) -> None:
        self.ledger[frame.klass.value]["injected"] += 1
        self.class_stats[frame.klass].record_sent(frame)
        self._stream(frame.stream_id, frame.klass).record_sent(frame)

    def record_delivery(self, record: Any, now: int) -> None:
        self.ledger[record.klass.value]["delivered"] += 1
        self.class_stats[record.klass].record_delivery(record, now)
        self._stream(record.stream_id, record.klass).record_delivery(record, now)

    def record_drop(self, frame: Frame, site: DropSite) -> None:
        self.ledger[frame.klass.value]["dropped"] += 1
        self.class_stats[frame.klass].record_drop(frame, site)
        self._stream(frame.stream_id, frame.klass).record_drop(frame, site)

    def handle(self, event: Event) -> None:
        """MetricsFlush marks the start of the measured interval."""
        if self.logger:
            self.logger.log_info(
                "Warm-up finished, measuring",
                {"t_ns": event.time, "injected": self.total_injected()},
            )

    def total_injected(self) -> int:
        return sum(entry["injected"] for entry in self.ledger.values())

    def class_rows(
        self,
        measured_interval: int,
        carryover: int = 0,
        scenario: Optional[Dict[str, Any]] = None,
    ) -> List[MetricsRow]:
        """One row per class, ST first; carryover is an ST-only statistic."""
        return [
            self.class_stats[TrafficClass.ST].finalize(
                TrafficClass.ST.value, measured_interval, carryover, scenario
            ),
            self.class_stats[TrafficClass.BE].finalize(
                TrafficClass.BE.value, measured_interval, 0, scenario
            ),
        ]

    def stream_rows(self, measured_interval: int) -> Dict[int, MetricsRow]:
        return {
            stream_id: stats.finalize(self.stream_classes[stream_id].value, measured_interval)
            for stream_id, stats in sorted(self.stream_stats.items())
        }
