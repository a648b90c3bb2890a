"""Ring network model: frames, links, egress ports and switches.

``port`` and ``topology`` are not re-exported (import cycle with src.scheduling).
"""

from .models import Frame, Link, TrafficClass

__all__ = ["Frame", "Link", "TrafficClass"]
