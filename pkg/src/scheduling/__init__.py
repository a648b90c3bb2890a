"""Egress-port schedulers: CQF, Paternoster and three-queue CQF."""

from .base import EgressScheduler, EnqueueResult, Gate, TimerOutcome
from .cqf import CqfScheduler
from .cqf3q import Cqf3qScheduler
from .paternoster import PaternosterScheduler
from .queues import BoundedQueue
from .scheduler_factory import SchedulerFactory

__all__ = [
    "BoundedQueue",
    "CqfScheduler",
    "Cqf3qScheduler",
    "EgressScheduler",
    "EnqueueResult",
    "Gate",
    "PaternosterScheduler",
    "SchedulerFactory",
    "TimerOutcome",
]
