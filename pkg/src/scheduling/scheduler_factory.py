"""Factory for creating egress schedulers."""

from src.config.models import SCHEDULERS, ScenarioConfig

from .base import EgressScheduler
from .cqf import CqfScheduler
from .cqf3q import Cqf3qScheduler
from .paternoster import PaternosterScheduler


class SchedulerFactory:
    """Factory for creating egress-port schedulers from a scenario."""

    @staticmethod
    def create_scheduler(kind: str, config: ScenarioConfig, phase: int = 0) -> EgressScheduler:
        """Create a scheduler for one egress port.

        Args:
            kind: Scheduler type ("cqf", "paternoster" or "cqf3q")
            config: Scenario configuration supplying timing and queue sizes
            phase: Epoch phase of the port (Paternoster only)

        Returns:
            EgressScheduler instance

        Raises:
            ValueError: If kind is not supported
        """
        kind = kind.lower()

        if kind == "cqf":
            return CqfScheduler(
                cycle_time=config.cycle_time_ns,
                st_window=config.st_window_ns,
                queue_bits=config.queue_bits,
                link_rate_bps=config.link_rate_bps,
            )
        elif kind == "cqf3q":
            return Cqf3qScheduler(
                cycle_time=config.cycle_time_ns,
                st_window=config.st_window_ns,
                queue_bits=config.queue_bits,
                link_rate_bps=config.link_rate_bps,
            )
        elif kind == "paternoster":
            return PaternosterScheduler(
                epoch=config.epoch_ns,
                reservation_bits=config.reservation_bits,
                queue_bits=config.queue_bits,
                phase=phase,
            )
        else:
            raise ValueError(
                f"Unsupported scheduler type: {kind}. Supported: {', '.join(SCHEDULERS)}"
            )

    @staticmethod
    def get_supported_schedulers() -> list:
        """Get list of supported scheduler types."""
        return list(SCHEDULERS)
