"""Discrete-event simulation kernel."""

from .event import Event, EventKind, EventQueue
from .simulator import RunReport, SimulationError, Simulator

__all__ = ["Event", "EventKind", "EventQueue", "RunReport", "SimulationError", "Simulator"]
