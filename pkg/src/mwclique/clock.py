"""Clocks shared by the reducer and the solvers.

``WallClock`` measures monotonic wall time. ``WorkClock`` counts abstract work
units (roughly one per adjacency touch) instead, so that rate-based pausing,
deadlines and reported times become reproducible bit for bit.
"""
from __future__ import annotations

import time

TICKS_PER_SECOND = 2_000_000


class WallClock:
    kind = "wall"

    def __init__(self):
        self._start = time.perf_counter()

    def now(self) -> float:
        return time.perf_counter() - self._start

    def tick(self, k: int = 1):
        pass


class WorkClock:
    kind = "work"

    def __init__(self):
        self.ticks = 0

    def now(self) -> float:
        return self.ticks / TICKS_PER_SECOND

    def tick(self, k: int = 1):
        self.ticks += k


def make_clock(kind: str = "wall"):
    if kind == "wall":
        return WallClock()
    if kind == "work":
        return WorkClock()
    raise ValueError(f"unknown clock kind {kind!r}")
