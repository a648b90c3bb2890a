"""Bit-bounded FIFO queue used by every egress scheduler."""

from collections import deque
from typing import Deque, List, Optional

from src.network.models import Frame


class BoundedQueue:
    """FIFO of frames whose total size may not exceed ``capacity_bits``."""

    def __init__(self, capacity_bits: int, name: str = ""):
        if capacity_bits <= 0:
            raise ValueError(f"Invalid capacity_bits: {capacity_bits}. Must be positive")
        self.capacity_bits = capacity_bits
        self.name = name
        self.occupancy_bits = 0
        self._frames: Deque[Frame] = deque()

    def has_room(self, bits: int) -> bool:
        return self.occupancy_bits + bits <= self.capacity_bits

    def push(self, frame: Frame) -> bool:
        """Append a frame; returns False (and leaves the queue unchanged) if full."""
        bits = frame.size_bytes * 8
        if self.occupancy_bits + bits > self.capacity_bits:
            return False
        self._frames.append(frame)
        self.occupancy_bits += bits
        return True

    def head(self) -> Optional[Frame]:
        return self._frames[0] if self._frames else None

    def pop(self) -> Frame:
        frame = self._frames.popleft()
        self.occupancy_bits -= frame.size_bytes * 8
        return frame

    def clear(self) -> List[Frame]:
        """Remove and return every queued frame."""
        frames = list(self._frames)
        self._frames.clear()
        self.occupancy_bits = 0
        return frames

    def __len__(self) -> int:
        return len(self._frames)

    def __bool__(self) -> bool:
        return bool(self._frames)

    def __iter__(self):
        return iter(self._frames)

    def __repr__(self) -> str:
        return f"BoundedQueue({self.name!r}, frames={len(self)}, bits={self.occupancy_bits})"
