"""Analytic CQF delay bounds and saturation thresholds."""

from dataclasses import dataclass
from typing import List, Optional


@dataclass(frozen=True)
class BoundInput:
    """Inputs of the closed-form bounds."""

    hops: int
    cycle_time_ns: int
    st_window_ns: Optional[int] = None
    link_rate_bps: int = 1_000_000_000
    streams_per_link: int = 3
    frame_bits: int = 512
    prop_delay_ns: int = 0

    def __post_init__(self):
        """Validate bound inputs after initialization."""
        if self.hops < 1:
            raise ValueError(f"Invalid hops: {self.hops}. Must be at least 1")
        if self.cycle_time_ns <= 0:
            raise ValueError("Cycle time must be positive")
        if not 0 < self.window <= self.cycle_time_ns:
            raise ValueError("ST window must be positive and no longer than the cycle time")
        if self.link_rate_bps <= 0 or self.frame_bits <= 0:
            raise ValueError("Link rate and frame size must be positive")
        if self.prop_delay_ns < 0:
            raise ValueError("Propagation delay cannot be negative")

    @property
    def window(self) -> int:
        """ST window; half the cycle when not given."""
        if self.st_window_ns is None:
            return self.cycle_time_ns // 2
        return self.st_window_ns

    @property
    def conforming(self) -> bool:
        return self.prop_delay_ns <= self.window


@dataclass(frozen=True)
class DelayBounds:
    d_min: int
    d_max: int
    conforming: bool


def cqf_delay_bounds(b: BoundInput) -> DelayBounds:
    """End-to-end CQF bounds: (H-1)*CT <= delay <= (H+1)*CT.

    The result is flagged non-conforming when the propagation delay exceeds
    the ST window; the bounds are then not guaranteed.
    """
    return DelayBounds(
        d_min=max(0, (b.hops - 1) * b.cycle_time_ns),
        d_max=(b.hops + 1) * b.cycle_time_ns,
        conforming=b.conforming,
    )


def cqf_nonconforming_max(b: BoundInput) -> int:
    """Maximum delay when propagation exceeds the ST window.

    Uses the observed doubling at a propagation delay of one cycle, 2*(H+1)*CT;
    this is an empirical rule, not a derived one. Conforming inputs return the
    regular bound.
    """
    bounds = cqf_delay_bounds(b)
    if bounds.conforming:
        return bounds.d_max
    return 2 * bounds.d_max


def saturation_pi(b: BoundInput, window_ns: Optional[int] = None) -> int:
    """Largest frames-per-cycle count whose overlapping streams fit the window.

    Args:
        b: Bound inputs
        window_ns: Transmission opportunity per cycle; the ST window by default

    Returns:
        max pi with streams_per_link * pi * frame_bits <= window * rate
    """
    if b.streams_per_link < 1:
        raise ValueError("streams_per_link must be at least 1")
    window = b.window if window_ns is None else window_ns
    window_bits = window * b.link_rate_bps // 1_000_000_000
    return window_bits // (b.streams_per_link * b.frame_bits)


def streams_per_link(switches: int, ttl: int) -> int:
    """Distinct streams crossing each link when every switch sources one."""
    if switches < 2 or ttl < 1:
        raise ValueError("Need at least 2 switches and a TTL of at least 1")
    return min(ttl, switches)


def bounds_table(b: BoundInput) -> str:
    """Human-readable table of every closed-form result for ``b``."""
    bounds = cqf_delay_bounds(b)
    rows: List[tuple] = [
        ("hops", b.hops),
        ("cycle_time_ns", b.cycle_time_ns),
        ("st_window_ns", b.window),
        ("prop_delay_ns", b.prop_delay_ns),
        ("conforming", "yes" if bounds.conforming else "no"),
        ("d_min_ns", bounds.d_min),
        ("d_max_ns", bounds.d_max),
        ("nonconforming_max_ns", cqf_nonconforming_max(b)),
        ("streams_per_link", b.streams_per_link),
        ("saturation_pi_st_window", saturation_pi(b)),
        ("saturation_pi_full_epoch", saturation_pi(b, window_ns=b.cycle_time_ns)),
    ]
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)
