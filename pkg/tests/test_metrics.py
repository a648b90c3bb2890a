"""Unit tests for ClassStats and MetricsCollector."""

from unittest.mock import Mock

import numpy as np
import pytest

from src.engine import Event, EventKind
from src.metrics import ClassStats, DropSite, MetricsCollector
from src.network import Frame, TrafficClass
from src.traffic import DeliveryRecord


def record(delay, klass=TrafficClass.ST, bits=512, stream_id=0):
    return DeliveryRecord(
        stream_id=stream_id, klass=klass, delay_ns=delay, bits=bits, delivered_at=delay
    )


def frame(created_at=0, klass=TrafficClass.ST, stream_id=0):
    return Frame(
        id=0,
        stream_id=stream_id,
        klass=klass,
        size_bytes=64,
        created_at=created_at,
        src_switch=0,
        remaining_hops=0,
    )


class TestClassStats:
    """Test cases for ClassStats."""

    def test_mean_and_jitter_of_two_samples(self):
        stats = ClassStats()
        stats.record_delivery(record(100_000), 100_000)
        stats.record_delivery(record(200_000), 200_000)

        assert stats.mean_delay == 150_000
        assert stats.jitter == pytest.approx(50_000)
        assert stats.min_delay == 100_000
        assert stats.max_delay == 200_000

    def test_single_sample_has_zero_jitter(self):
        stats = ClassStats()
        stats.record_delivery(record(1234), 1234)
        assert stats.jitter == 0

    def test_constant_delay_has_zero_jitter(self):
        stats = ClassStats()
        for t in range(1_000):
            stats.record_delivery(record(151_012), t)
        assert stats.jitter == 0.0

    def test_delivery_during_warmup_ignored(self):
        stats = ClassStats(warmup_end=10_000)
        stats.record_delivery(record(500), 9_999)

        assert stats.count == 0
        assert stats.bits_delivered == 0

    def test_delivery_at_warmup_end_counted(self):
        stats = ClassStats(warmup_end=10_000)
        stats.record_delivery(record(500), 10_000)
        assert stats.count == 1

    def test_sent_and_dropped_follow_creation_time(self):
        stats = ClassStats(warmup_end=1_000)
        stats.record_sent(frame(created_at=999))
        stats.record_sent(frame(created_at=1_000))
        stats.record_drop(frame(created_at=999), DropSite.OVERFLOW)
        stats.record_drop(frame(created_at=1_000), DropSite.OVERFLOW)

        assert stats.frames_sent == 1
        assert stats.frames_dropped == 1

    def test_drop_sites_counted_separately(self):
        stats = ClassStats()
        for _ in range(3):
            stats.record_drop(frame(), DropSite.PURGE)
        stats.record_drop(frame(), DropSite.OVERFLOW)

        assert stats.drops_by_site[DropSite.PURGE] == 3
        assert stats.drops_by_site[DropSite.OVERFLOW] == 1
        assert stats.frames_dropped == 4

    def test_loss_ratio(self):
        stats = ClassStats()
        for _ in range(4):
            stats.record_sent(frame())
        stats.record_drop(frame(), DropSite.OVERFLOW)
        assert stats.loss_ratio == 0.25

    def test_loss_ratio_without_traffic(self):
        assert ClassStats().loss_ratio == 0.0

    def test_finalize_throughput(self):
        stats = ClassStats()
        stats.record_delivery(record(10, bits=1_000_000), 10)

        row = stats.finalize("ST", 1_000_000)

        assert row.throughput_bps == pytest.approx(1e9)
        assert row.count == 1

    def test_finalize_without_deliveries(self):
        row = ClassStats().finalize("BE", 1_000)

        assert row.mean_delay_ns is None
        assert row.min_delay_ns is None
        assert row.max_delay_ns is None
        assert row.jitter_ns is None
        assert row.throughput_bps == 0
        assert row.loss_ratio == 0.0

    def test_finalize_requires_positive_interval(self):
        with pytest.raises(ValueError):
            ClassStats().finalize("ST", 0)

    def test_finalize_copies_counters_and_scenario(self):
        stats = ClassStats()
        stats.record_drop(frame(), DropSite.PURGE)
        scenario = {"pi": 8}

        row = stats.finalize("ST", 1_000, carryover=5, scenario=scenario)
        scenario["pi"] = 9

        assert row.purge_drops == 1
        assert row.overflow_drops == 0
        assert row.carryover_count == 5
        assert row.scenario == {"pi": 8}

    def test_min_mean_max_ordering(self):
        stats = ClassStats()
        rng = np.random.default_rng(4)
        for delay in rng.integers(100_000, 200_000, size=500):
            stats.record_delivery(record(int(delay)), 0)
        assert stats.min_delay <= stats.mean_delay <= stats.max_delay
        assert stats.m2 >= 0

    def test_welford_matches_two_pass(self):
        """One-pass mean/variance match numpy's two-pass values on 10^6 samples."""
        rng = np.random.default_rng(2024)
        delays = rng.integers(100_000, 400_000, size=1_000_000)
        stats = ClassStats()
        for delay in delays.tolist():
            stats.record_delivery(record(delay), 0)

        assert stats.mean_delay == pytest.approx(np.mean(delays), rel=1e-9)
        assert stats.jitter**2 == pytest.approx(np.var(delays), rel=1e-9)


class TestMetricsCollector:
    """Test cases for MetricsCollector."""

    def test_routes_by_class_and_stream(self):
        collector = MetricsCollector()
        collector.record_delivery(record(100, stream_id=1), 100)
        collector.record_delivery(record(300, klass=TrafficClass.BE, stream_id=7), 300)

        assert collector.class_stats[TrafficClass.ST].count == 1
        assert collector.class_stats[TrafficClass.BE].count == 1
        assert collector.stream_stats[1].count == 1
        assert collector.stream_stats[7].count == 1

    def test_ledger_ignores_warmup(self):
        collector = MetricsCollector(warmup_end=1_000_000)
        collector.record_sent(frame())
        collector.record_delivery(record(10), 10)
        collector.record_drop(frame(), DropSite.OVERFLOW)

        assert collector.ledger["ST"] == {"injected": 1, "delivered": 1, "dropped": 1}
        assert collector.class_stats[TrafficClass.ST].count == 0

    def test_class_rows_order_and_carryover(self):
        collector = MetricsCollector()
        rows = collector.class_rows(1_000, carryover=4, scenario={"seed": 1})

        assert [row.klass for row in rows] == ["ST", "BE"]
        assert rows[0].carryover_count == 4
        assert rows[1].carryover_count == 0
        assert rows[0].scenario == {"seed": 1}

    def test_stream_rows(self):
        collector = MetricsCollector()
        collector.record_sent(frame(stream_id=8, klass=TrafficClass.BE))
        collector.record_sent(frame(stream_id=2))

        rows = collector.stream_rows(1_000)

        assert list(rows) == [2, 8]
        assert rows[8].klass == "BE"

    def test_flush_event_logs(self):
        logger = Mock()
        collector = MetricsCollector(warmup_end=5, logger=logger)

        collector.handle(Event(5, EventKind.METRICS_FLUSH, 0, "metrics"))

        logger.log_info.assert_called_once()
