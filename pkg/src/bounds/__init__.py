"""Closed-form CQF bounds used as the simulator's oracle."""

from .calculator import (
    BoundInput,
    DelayBounds,
    bounds_table,
    cqf_delay_bounds,
    cqf_nonconforming_max,
    saturation_pi,
    streams_per_link,
)

__all__ = [
    "BoundInput",
    "DelayBounds",
    "bounds_table",
    "cqf_delay_bounds",
    "cqf_nonconforming_max",
    "saturation_pi",
    "streams_per_link",
]
