"""Delay, jitter, throughput and loss statistics."""

from .collector import MetricsCollector
from .stats import ClassStats, DropSite, MetricsRow

__all__ = ["ClassStats", "DropSite", "MetricsCollector", "MetricsRow"]
