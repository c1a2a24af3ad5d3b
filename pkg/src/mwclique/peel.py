"""Reduce-and-peel heuristic.

Alternates exhaustive exact reduction with peeling off the vertices of lowest
score ``w(N[v])``, then hands the residue to the exact solver. A snapshot taken
before every peel is restored if peeling ever empties the graph.
"""
from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field, replace
from typing import Optional

from .bnb import solve_exact
from .bounds import initial_clique
from .clock import WallClock
from .graph import Clique, WeightedGraph
from .reductions import Incumbent, ReductionTrace, VertexRemoved, reconstruct
from .scheduler import Reducer, SchedulerConfig


@dataclass
class PeelConfig:
    score_deterioration_threshold: float = 0.9
    score_gap_threshold: float = 0.9
    large_n_cutoff: int = 50000
    large_fraction: float = 0.1
    small_fraction: float = 0.01
    # hand over to the exact solver once this few vertices remain
    small_residue: int = 1024
    interpolate_small: bool = False
    scheduler: SchedulerConfig = field(default_factory=SchedulerConfig)

    def __post_init__(self):
        for name in ("score_deterioration_threshold", "score_gap_threshold", "large_fraction", "small_fraction"):
            x = getattr(self, name)
            if not 0 < x < 1:
                raise ValueError(f"{name} must lie in (0, 1), got {x}")
        if self.large_n_cutoff < 1:
            raise ValueError("large_n_cutoff must be >= 1")


def peel_batch_size(n: int, config: Optional[PeelConfig] = None) -> int:
    config = config or PeelConfig()
    if n <= 0:
        return 0
    if n > config.large_n_cutoff:
        k = math.floor(config.large_fraction * n)
    elif config.interpolate_small:
        # smooth variant reaching large_fraction * n at the cutoff; never the default
        k = math.floor(max(config.small_fraction * n, config.large_fraction * n * n / config.large_n_cutoff))
    else:
        k = math.floor(config.small_fraction * n)
    return max(k, 1)


def score(g: WeightedGraph, v: int) -> int:
    return g.nw[v]


def should_stop(initial_max: float, scores, config: Optional[PeelConfig] = None) -> bool:
    config = config or PeelConfig()
    scores = list(scores)
    hi, lo = max(scores), min(scores)
    if hi < config.score_deterioration_threshold * initial_max:
        return True
    return lo > config.score_gap_threshold * hi


@dataclass
class GraphSnapshot:
    graph: WeightedGraph
    trace: ReductionTrace
    best: Clique

    @classmethod
    def take(cls, g: WeightedGraph, trace: ReductionTrace, best: Clique) -> "GraphSnapshot":
        return cls(g.copy(), trace.copy(), best)

    def restore(self) -> tuple:
        return self.graph.copy(), self.trace.copy(), self.best


@dataclass
class PeelResult:
    clique: Clique
    stats: dict


def mwc_peel(
    g: WeightedGraph,
    config: Optional[PeelConfig] = None,
    time_limit: Optional[float] = None,
    clock=None,
    seed: int = 0,
) -> PeelResult:
    """Heuristic maximum weight clique; the result is always valid in ``g``.

    ``g`` itself is left untouched.
    """
    config = config or PeelConfig()
    clock = clock or WallClock()
    deadline = None if time_limit is None else clock.now() + time_limit
    work = g.copy()
    trace = ReductionTrace.for_graph(g)
    incumbent = Incumbent(initial_clique(work), clock)
    sched = replace(config.scheduler, local_search=replace(config.scheduler.local_search, seed=seed))
    reducer = Reducer(work, incumbent, sched, trace=trace, clock=clock, rng=random.Random(seed))
    stats = {"rounds": 0, "peeled": 0, "restored": False, "stop": None}
    first = True
    initial_max = None
    snapshot = None
    while True:
        reducer.run(degree_limit=first)
        if first:
            stats["kernel_n"], stats["kernel_m"] = work.n, work.m
        if work.n == 0:
            if snapshot is None:
                stats["stop"] = "empty"
                break
            # the incumbent stays: it is valid in the input graph whatever happened since
            work, trace, _ = snapshot.restore()
            stats["restored"] = True
            stats["stop"] = "restored"
            break
        scores = [work.nw[v] for v in work.vertices()]
        if initial_max is None:
            initial_max = max(scores)
        if should_stop(initial_max, scores, config):
            stats["stop"] = "scores"
            break
        if work.n <= config.small_residue:
            stats["stop"] = "small"
            break
        if deadline is not None and clock.now() >= deadline:
            stats["stop"] = "time"
            break
        snapshot = GraphSnapshot.take(work, trace, incumbent.clique)
        k = peel_batch_size(work.n, config)
        victims = heapq.nsmallest(k, work.vertices(), key=lambda v: (work.nw[v], v))
        touched = set()
        for v in victims:
            touched.update(work.adj[v])
            work.remove_vertex(v)
            trace.append(VertexRemoved(v))
        touched.difference_update(victims)
        reducer.requeue(touched)
        stats["rounds"] += 1
        stats["peeled"] += len(victims)
        first = False
    stats["residue_n"], stats["residue_m"] = work.n, work.m
    stats["reduce"] = reducer.stats()
    best = incumbent.clique
    if work.n:
        remaining = None if deadline is None else max(0.0, deadline - clock.now())
        res = solve_exact(work, lower_bound=best.weight, time_limit=remaining, clock=clock)
        stats["proven_residue"] = res.proven
        stats["nodes"] = res.stats["nodes"]
        if res.clique is not None:
            incumbent.offer(reconstruct(trace, res.clique))
    stats["found_at"] = incumbent.found_at
    return PeelResult(incumbent.clique, stats)
