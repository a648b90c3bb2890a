"""Logging module for simulation runs."""

from .sim_logger import SimLogger
from .logger_adapter import LoggerAdapter

__all__ = ["SimLogger", "LoggerAdapter"]
