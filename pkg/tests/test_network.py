"""Unit tests for frames, links, egress ports and the ring topology."""

from unittest.mock import Mock

import pytest

from src.config.models import ScenarioConfig, SweepRange
from src.engine import EventKind, SimulationError, Simulator
from src.metrics.collector import MetricsCollector
from src.metrics.stats import DropSite
from src.network import Frame, Link, TrafficClass
from src.network.port import EgressPort
from src.network.topology import Switch, build_ring, streams_on_link
from src.scheduling import CqfScheduler, EnqueueResult


def make_frame(frame_id=0, klass=TrafficClass.ST, size=64, hops=2, created_at=0, stream_id=0):
    return Frame(
        id=frame_id,
        stream_id=stream_id,
        klass=klass,
        size_bytes=size,
        created_at=created_at,
        src_switch=0,
        remaining_hops=hops,
    )


def small_config(**overrides):
    values = dict(
        pi=2,
        prop_delay_ns=500,
        be_intensity_bps=0,
        sim_limit_ns=2_000_000,
        warmup_ns=0,
    )
    values.update(overrides)
    return ScenarioConfig(**values)


class TestFrameAndLink:
    """Test cases for Frame and Link models."""

    def test_frame_bits(self):
        assert make_frame(size=64).bits == 512

    @pytest.mark.parametrize(
        "field,value", [("size_bytes", 0), ("remaining_hops", -1), ("created_at", -5)]
    )
    def test_frame_rejects_invalid_fields(self, field, value):
        kwargs = dict(
            id=0,
            stream_id=0,
            klass=TrafficClass.ST,
            size_bytes=64,
            created_at=0,
            src_switch=0,
            remaining_hops=3,
        )
        kwargs[field] = value
        with pytest.raises(ValueError):
            Frame(**kwargs)

    def test_tx_time_st_frame(self):
        assert Link(0, 1, 500).tx_time_ns(64) == 512

    def test_tx_time_be_frame(self):
        assert Link(0, 1, 500).tx_time_ns(580) == 4640

    def test_tx_time_rounds_up(self):
        assert Link(0, 1, 0, rate_bps=3_000_000_000).tx_time_ns(1) == 3

    def test_link_rejects_invalid_values(self):
        with pytest.raises(ValueError):
            Link(0, 1, 500, rate_bps=0)
        with pytest.raises(ValueError):
            Link(0, 1, -1)


class TestEgressPort:
    """Test cases for EgressPort transmission timing."""

    @pytest.fixture
    def setup(self):
        sim = Simulator()
        arrivals = []
        sim.register("switch:1", arrivals.append)
        scheduler = CqfScheduler(50_000, 25_000, 512 * 1024, 1_000_000_000)
        drops = []
        port = EgressPort(
            0, Link(0, 1, 500), scheduler, sim, on_drop=lambda f, s: drops.append((f, s))
        )
        port.start()
        return sim, port, arrivals, drops

    def test_transmit_schedules_completion_and_arrival(self, setup):
        sim, port, arrivals, _ = setup
        frame = make_frame()

        port.transmit(frame, 0)
        sim.run(2_000)

        assert len(arrivals) == 1
        assert arrivals[0].time == 1_012
        assert arrivals[0].payload is frame
        assert not port.busy
        assert port.frames_transmitted == 1

    def test_overlapping_transmission_raises(self, setup):
        _, port, _, _ = setup
        port.transmit(make_frame(0), 0)
        with pytest.raises(SimulationError):
            port.transmit(make_frame(1), 100)

    def test_cqf_frame_waits_for_next_cycle(self, setup):
        sim, port, arrivals, _ = setup

        assert port.enqueue(make_frame(), 0) is EnqueueResult.ACCEPTED
        sim.run(100_000)

        assert [event.time for event in arrivals] == [50_000 + 512 + 500]

    def test_back_to_back_frames(self, setup):
        sim, port, arrivals, _ = setup
        for i in range(3):
            port.enqueue(make_frame(i), 10)
        sim.run(100_000)

        assert [e.time for e in arrivals] == [51_012, 51_524, 52_036]

    def test_overflow_drop_reported(self):
        sim = Simulator()
        scheduler = CqfScheduler(50_000, 25_000, 512, 1_000_000_000)
        drops = []
        port = EgressPort(0, Link(0, 1, 500), scheduler, sim, on_drop=lambda f, s: drops.append(s))

        port.enqueue(make_frame(0), 0)
        result = port.enqueue(make_frame(1), 0)

        assert result is EnqueueResult.DROPPED
        assert drops == [DropSite.OVERFLOW]


class TestSwitch:
    """Test cases for Switch ingest."""

    @pytest.fixture
    def switch(self):
        return Switch(3, egress=Mock(), sink=Mock(), sim=Simulator())

    def test_zero_hops_delivers_to_sink(self, switch):
        frame = make_frame(hops=0)
        switch.ingest(frame, 150_000)

        switch.sink.receive.assert_called_once_with(frame, 150_000)
        switch.egress.enqueue.assert_not_called()

    def test_forwarding_decrements_hops(self, switch):
        frame = make_frame(hops=3)
        switch.ingest(frame, 10)

        assert frame.remaining_hops == 2
        switch.egress.enqueue.assert_called_once_with(frame, 10)
        switch.sink.receive.assert_not_called()

    def test_inject_stamps_before_ingest(self, switch):
        frame = make_frame(hops=3)
        switch.inject(frame, 0)

        switch.egress.scheduler.stamp_injection.assert_called_once_with(frame, 0)
        switch.egress.enqueue.assert_called_once()

    def test_rejects_non_arrival_events(self, switch):
        event = Mock(kind=EventKind.TX_COMPLETE)
        with pytest.raises(SimulationError):
            switch.handle(event)


class TestBuildRing:
    """Test cases for build_ring."""

    def test_default_ring_size(self):
        topology = build_ring(small_config(be_intensity_bps=1_000_000_000), Simulator())

        assert len(topology.switches) == 6
        assert len(topology.links) == 6
        assert len({id(s.sink) for s in topology.switches}) == 6
        assert len(topology.sources) == 12

    def test_links_form_unidirectional_ring(self):
        topology = build_ring(small_config(switches=4), Simulator())
        assert [(l.src_switch, l.dst_switch) for l in topology.links] == [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
        ]

    def test_smallest_ring(self):
        topology = build_ring(small_config(switches=2), Simulator())
        assert len(topology.links) == 2

    def test_single_switch_rejected(self):
        with pytest.raises(ValueError):
            build_ring(small_config(switches=1), Simulator())

    def test_disabled_be_leaves_only_st_sources(self):
        topology = build_ring(small_config(), Simulator())
        assert len(topology.sources) == 6
        assert all(s.spec.klass is TrafficClass.ST for s in topology.sources)

    def test_sweep_range_rejected(self):
        config = small_config(prop_delay_ns=SweepRange(explicit=(500, 25_000)))
        with pytest.raises(ValueError):
            build_ring(config, Simulator())

    def test_stream_ids(self):
        topology = build_ring(small_config(be_intensity_bps=1_000_000_000), Simulator())
        st_ids = sorted(s.spec.stream_id for s in topology.sources if s.spec.klass.value == "ST")
        be_ids = sorted(s.spec.stream_id for s in topology.sources if s.spec.klass.value == "BE")
        assert st_ids == list(range(6))
        assert be_ids == list(range(6, 12))

    def test_paternoster_phases_differ_per_port(self):
        topology = build_ring(small_config(scheduler="paternoster"), Simulator(), run_seed=99)
        phases = [port.scheduler.phase for port in topology.ports]
        assert all(0 <= p < 50_000 for p in phases)
        assert len(set(phases)) > 1

    def test_paternoster_phases_reproducible(self):
        first = build_ring(small_config(scheduler="paternoster"), Simulator(), run_seed=5)
        second = build_ring(small_config(scheduler="paternoster"), Simulator(), run_seed=5)
        assert [p.scheduler.phase for p in first.ports] == [
            p.scheduler.phase for p in second.ports
        ]

    def test_frame_delivered_ttl_hops_downstream(self):
        sim = Simulator()
        topology = build_ring(small_config(pi=1), sim)
        topology.sources = topology.sources[:1]
        topology.start()

        sim.run(1_000_000)

        delivered = [switch.sink.delivered for switch in topology.switches]
        assert delivered[3] > 0
        assert sum(delivered) == delivered[3]


class TestConservation:
    """Frames are never created or lost without being accounted for."""

    @pytest.mark.parametrize("scheduler", ["cqf", "paternoster", "cqf3q"])
    def test_drained_ring_conserves_frames(self, scheduler):
        sim = Simulator()
        collector = MetricsCollector()
        config = small_config(scheduler=scheduler, pi=20, stream_duration_ns=1_000_000)
        topology = build_ring(config, sim, collector=collector, run_seed=3)
        topology.start()

        sim.run(config.sim_limit_ns)

        for klass, counts in collector.ledger.items():
            assert counts["injected"] == counts["delivered"] + counts["dropped"], klass
        assert collector.ledger["ST"]["injected"] > 0
        assert topology.in_flight() == 0

    def test_conservation_holds_mid_run(self):
        sim = Simulator()
        collector = MetricsCollector()
        config = small_config(pi=12, be_intensity_bps=1_000_000_000)
        topology = build_ring(config, sim, collector=collector, run_seed=11)
        topology.start()

        for until in (123_457, 456_789, 1_000_003):
            sim.run(until)
            injected = sum(c["injected"] for c in collector.ledger.values())
            delivered = sum(c["delivered"] for c in collector.ledger.values())
            dropped = sum(c["dropped"] for c in collector.ledger.values())
            assert injected == delivered + dropped + topology.in_flight()


class TestStreamsOnLink:
    """Test cases for the link occupancy enumeration."""

    def test_default_ring_has_three_streams_per_link(self):
        crossing = streams_on_link(6, 3)
        assert all(len(gateways) == 3 for gateways in crossing.values())

    def test_link_zero_carries_upstream_gateways(self):
        assert sorted(streams_on_link(6, 3)[0]) == [0, 4, 5]
