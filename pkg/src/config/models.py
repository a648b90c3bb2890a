"""Data models for scenario configuration."""

import itertools
from dataclasses import dataclass, field, fields, replace
from typing import Any, Dict, List, Optional, Tuple, Union

SCHEDULERS = ("cqf", "paternoster", "cqf3q")
ST_KINDS = ("periodic", "sporadic")

# Keys that accept either a scalar or a sweep range
SWEEPABLE_KEYS = ("prop_delay_ns", "pi", "st_intensity_bps")

# Experiment ranges; values outside are legal but logged
PI_RANGE = (1, 40)
ST_INTENSITY_RANGE = (100_000_000, 2_000_000_000)


@dataclass(frozen=True)
class SweepRange:
    """Range of integer values swept across runs.

    Either an inclusive ``start``..``stop`` range with ``step`` or an explicit
    tuple of values.
    """

    start: Optional[int] = None
    stop: Optional[int] = None
    step: int = 1
    explicit: Tuple[int, ...] = ()

    def values(self) -> List[int]:
        """Expand the range into the list of swept values."""
        if self.explicit:
            return list(self.explicit)
        return list(range(self.start, self.stop + 1, self.step))

    def validate(self) -> tuple[bool, Optional[str]]:
        """Validate the sweep range.

        Returns:
            Tuple of (is_valid, error_message)
        """
        if self.explicit:
            if self.start is not None or self.stop is not None:
                return False, "Sweep range cannot mix explicit values with from/to"
            return True, None
        if self.start is None or self.stop is None:
            return False, "Sweep range requires both 'from' and 'to'"
        if self.step <= 0:
            return False, "Sweep range step must be positive"
        if self.stop < self.start:
            return False, f"Sweep range is empty (from {self.start} > to {self.stop})"
        return True, None

    def to_json(self) -> Union[Dict[str, int], List[int]]:
        """Render the range in its configuration document form."""
        if self.explicit:
            return list(self.explicit)
        return {"from": self.start, "to": self.stop, "step": self.step}


Sweepable = Union[int, SweepRange]


def sweep_values(value: Sweepable) -> List[int]:
    """Return the swept values of a scalar-or-range field."""
    if isinstance(value, SweepRange):
        return value.values()
    return [value]


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "INFO"
    file_path: str = "logs/tsn_sim.log"

    def validate(self) -> tuple[bool, Optional[str]]:
        """Validate logging configuration.

        Returns:
            Tuple of (is_valid, error_message)
        """
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.level.upper() not in valid_levels:
            return False, f"Log level must be one of {valid_levels}"
        if not self.file_path or not self.file_path.strip():
            return False, "Log file path is required"
        return True, None


@dataclass
class ScenarioConfig:
    """Full parameterization of a simulation scenario.

    Defaults describe the six-switch reference ring at 1 Gbps, with
    a desk-scale simulation limit of one second.
    """

    scheduler: str = "cqf"
    switches: int = 6
    cycle_time_ns: int = 50_000
    st_window_ns: int = 25_000
    prop_delay_ns: Sweepable = 500
    ttl: int = 3
    st_kind: str = "periodic"
    pi: Sweepable = field(default_factory=lambda: SweepRange(1, 40, 1))
    st_intensity_bps: Sweepable = field(
        default_factory=lambda: SweepRange(100_000_000, 2_000_000_000, 100_000_000)
    )
    be_intensity_bps: int = 1_000_000_000
    st_frame_bytes: int = 64
    be_frame_bytes: int = 580
    queue_bits: int = 512 * 1024
    reservation_fraction: float = 1.0
    link_rate_bps: int = 1_000_000_000
    sim_limit_ns: int = 1_000_000_000
    warmup_ns: int = 10_000_000
    stream_duration_ns: Optional[int] = None
    source_phase_offset_ns: int = 0
    hurst: float = 0.5
    seed: int = 1
    replications: int = 1
    logging_config: LoggingConfig = field(default_factory=LoggingConfig)

    @property
    def epoch_ns(self) -> int:
        """Paternoster epoch duration (frequency-synchronized with the cycle)."""
        return self.cycle_time_ns

    @property
    def reservation_bits(self) -> int:
        """Per-epoch Paternoster reservation in bits."""
        full_epoch_bits = self.epoch_ns * self.link_rate_bps // 1_000_000_000
        return int(full_epoch_bits * self.reservation_fraction)

    def is_sweep(self) -> bool:
        """Whether any relevant key carries a sweep range."""
        return len(self.sweep_points()) > 1

    def sweep_keys(self) -> Tuple[str, ...]:
        """Sweepable keys that matter for the configured ST traffic kind."""
        st_key = "pi" if self.st_kind == "periodic" else "st_intensity_bps"
        return ("prop_delay_ns", st_key)

    def sweep_points(self) -> List["ScenarioConfig"]:
        """Expand the sweep ranges into scalar scenario points.

        Points are ordered with the propagation delay as the outer dimension.
        The ST dimension not used by ``st_kind`` collapses to its first value.
        """
        keys = self.sweep_keys()
        axes = [sweep_values(getattr(self, key)) for key in keys]
        collapsed = {
            key: sweep_values(getattr(self, key))[0]
            for key in SWEEPABLE_KEYS
            if key not in keys
        }
        points = []
        for combo in itertools.product(*axes):
            points.append(replace(self, **dict(zip(keys, combo)), **collapsed))
        return points

    def echo(self) -> Dict[str, Any]:
        """Scalar scenario values echoed into result rows, keyed alphabetically."""
        skip = {"logging_config", "replications"}
        values = {}
        for f in fields(self):
            if f.name in skip:
                continue
            value = getattr(self, f.name)
            if isinstance(value, SweepRange):
                value = value.values()[0]
            values[f.name] = value
        return dict(sorted(values.items()))

    def validate(self) -> tuple[bool, Optional[str]]:
        """Validate the entire configuration.

        Returns:
            Tuple of (is_valid, error_message)
        """
        if self.scheduler not in SCHEDULERS:
            return False, f"Scheduler must be one of {list(SCHEDULERS)}"
        if self.switches < 2:
            return False, "A ring needs at least 2 switches"
        if self.cycle_time_ns <= 0:
            return False, "Cycle time must be positive"
        if not 0 < self.st_window_ns <= self.cycle_time_ns:
            return False, "ST window must be positive and no longer than the cycle time"
        if self.ttl < 1:
            return False, "TTL must be at least 1"
        if self.st_kind not in ST_KINDS:
            return False, f"ST kind must be one of {list(ST_KINDS)}"

        for key in SWEEPABLE_KEYS:
            value = getattr(self, key)
            if isinstance(value, SweepRange):
                is_valid, error = value.validate()
                if not is_valid:
                    return False, f"{key}: {error}"
        if any(v < 0 for v in sweep_values(self.prop_delay_ns)):
            return False, "Propagation delay cannot be negative"
        if any(v < 1 for v in sweep_values(self.pi)):
            return False, "Frames per cycle (pi) must be at least 1"
        if any(v <= 0 for v in sweep_values(self.st_intensity_bps)):
            return False, "ST intensity must be positive"

        if self.be_intensity_bps < 0:
            return False, "BE intensity cannot be negative"
        if self.st_frame_bytes <= 0 or self.be_frame_bytes <= 0:
            return False, "Frame sizes must be positive"
        if self.queue_bits < max(self.st_frame_bytes, self.be_frame_bytes) * 8:
            return False, "Queue size must hold at least one frame"
        if not 0 < self.reservation_fraction <= 1:
            return False, "Reservation fraction must be in (0, 1]"
        if self.link_rate_bps <= 0:
            return False, "Link rate must be positive"
        if self.sim_limit_ns <= 0:
            return False, "Simulation limit must be positive"
        if not 0 <= self.warmup_ns < self.sim_limit_ns:
            return False, "Warm-up must be non-negative and shorter than the simulation"
        if self.stream_duration_ns is not None and self.stream_duration_ns <= 0:
            return False, "Stream duration must be positive"
        if not 0 <= self.source_phase_offset_ns < self.cycle_time_ns:
            return False, "Source phase offset must lie within one cycle"
        if self.hurst != 0.5:
            return False, "Only a Hurst parameter of 0.5 (Poisson traffic) is supported"
        if self.seed < 0:
            return False, "Seed cannot be negative"
        if self.replications < 1:
            return False, "Replications must be at least 1"

        is_valid, error = self.logging_config.validate()
        if not is_valid:
            return False, f"Logging config error: {error}"

        return True, None
