"""Reduction scheduler: dependency checking, reduction tracking and degree limits.

Each rule keeps a set of viable vertices. A vertex leaves the set when the rule
fails on it and re-enters when it or a neighbour is mutated. Rules whose
removal rate drops under a fraction of the current graph size per second are
paused until the other rules have removed that many vertices and edges.
Optionally only vertices up to a degree cap are tried; the cap grows in steps
of a fraction of the initial maximum degree.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional

from .bounds import LocalSearchConfig, local_search_improve
from .clock import WallClock
from .graph import Clique, WeightedGraph
from .reductions import (
    Incumbent,
    ReductionTrace,
    find_nonadjacent_dominator,
    is_simplicial,
    reconstruct,
    reduce_domination_adjacent,
    reduce_edge_bounding,
    reduce_largest_weight_neighbor,
    reduce_neighborhood_weight,
    reduce_simplicial,
    reduce_twin,
    VertexRemoved,
)

log = logging.getLogger(__name__)

OLD_RULES = ("neighborhood_weight", "largest_weight_neighbor")
ALL_RULES = (
    "neighborhood_weight",
    "twin",
    "simplicial",
    "edge_bounding",
    "domination_nonadjacent",
    "domination_adjacent",
)
BOUND_RULES = frozenset({"neighborhood_weight", "largest_weight_neighbor", "edge_bounding"})
RULE_SETS = {"old": OLD_RULES, "all": ALL_RULES}

MIN_SAMPLE_SECONDS = 0.01
MID_PASS_CHECK_EVERY = 1024


@dataclass
class SchedulerConfig:
    rules: tuple = ALL_RULES
    rate_threshold: float = 0.01
    degree_limit_enabled: bool = False
    initial_degree_fraction: float = 0.10
    degree_fraction_step: float = 0.10
    ls_interleave: bool = True
    resweep_on_improvement: bool = True
    local_search: LocalSearchConfig = field(default_factory=LocalSearchConfig)

    def __post_init__(self):
        for name in ("rate_threshold", "initial_degree_fraction", "degree_fraction_step"):
            x = getattr(self, name)
            if not 0 < x <= 1:
                raise ValueError(f"{name} must lie in (0, 1], got {x}")
        if isinstance(self.rules, str):
            self.rules = RULE_SETS[self.rules]
        unknown = set(self.rules) - set(ALL_RULES) - set(OLD_RULES)
        if unknown:
            raise ValueError(f"unknown rules {sorted(unknown)}")


@dataclass
class RuleStats:
    vertices: int = 0
    edges: int = 0
    applications: int = 0
    seconds: float = 0.0
    pauses: int = 0


@dataclass
class _RuleState:
    name: str
    viable: set
    paused: bool = False
    pause_baseline: int = 0
    pause_amount: float = 0.0
    stats: RuleStats = field(default_factory=RuleStats)


@dataclass
class ReduceResult:
    kernel: WeightedGraph
    best: Clique
    trace: ReductionTrace
    stats: dict
    levels: int = 1


class Reducer:
    """Holds a graph being reduced together with its trace, incumbent and queues."""

    def __init__(
        self,
        g: WeightedGraph,
        incumbent: Optional[Incumbent] = None,
        config: Optional[SchedulerConfig] = None,
        trace: Optional[ReductionTrace] = None,
        clock=None,
        rng: Optional[random.Random] = None,
    ):
        self.g = g
        self.config = config or SchedulerConfig()
        self.clock = clock or WallClock()
        self.trace = trace if trace is not None else ReductionTrace.for_graph(g)
        self.incumbent = incumbent if incumbent is not None else Incumbent(clock=self.clock)
        if self.incumbent.clock is None:
            self.incumbent.clock = self.clock
        self.rng = rng or random.Random(self.config.local_search.seed)
        alive = set(g.vertices())
        self.rules = [_RuleState(name, set(alive)) for name in self.config.rules]
        self.removed_total = 0
        self.cap: Optional[float] = None
        self.passes = 0
        self._apply = {
            "neighborhood_weight": self._neighborhood_weight,
            "largest_weight_neighbor": self._largest_weight_neighbor,
            "twin": self._twin,
            "simplicial": self._simplicial,
            "edge_bounding": self._edge_bounding,
            "domination_nonadjacent": self._domination_nonadjacent,
            "domination_adjacent": self._domination_adjacent,
        }

    # -- per-vertex rule wrappers: return (vertices removed, edges removed, touched) --

    def _neighborhood_weight(self, v):
        nbrs = list(self.g.adj[v])
        if reduce_neighborhood_weight(self.g, v, self.incumbent, self.trace):
            return 1, 0, nbrs
        return None

    def _largest_weight_neighbor(self, v):
        nbrs = list(self.g.adj[v])
        if reduce_largest_weight_neighbor(self.g, v, self.incumbent, self.trace):
            return 1, 0, nbrs
        return None

    def _twin(self, v):
        nbrs = list(self.g.adj[v])
        if reduce_twin(self.g, v, self.trace):
            return 1, 0, nbrs + [v]
        return None

    def _simplicial(self, v):
        g = self.g
        if not is_simplicial(g, v):
            return None
        nbrs = list(g.adj[v])
        before = self.incumbent.weight
        reduce_simplicial(g, v, self.incumbent, self.trace)
        if self.incumbent.weight > before:
            self._improved()
        return 1, 0, nbrs

    def _edge_bounding(self, v):
        g = self.g
        nbrs = list(g.adj[v])
        # the largest-weight-neighbour check is folded into this rule
        if v not in self.incumbent.members and nbrs:
            if reduce_largest_weight_neighbor(g, v, self.incumbent, self.trace):
                return 1, 0, nbrs
        k = reduce_edge_bounding(g, v, self.incumbent, self.trace)
        if k:
            touched = set(nbrs)
            touched.add(v)
            return 0, k, touched
        return None

    def _domination_nonadjacent(self, v):
        g = self.g
        if not g.adj[v] or find_nonadjacent_dominator(g, v) is None:
            return None
        nbrs = list(g.adj[v])
        g.remove_vertex(v)
        self.trace.append(VertexRemoved(v))
        return 1, 0, nbrs

    def _domination_adjacent(self, v):
        g = self.g
        av = g.adj[v]
        dv = len(av)
        adj = g.adj
        for u in sorted(av):
            if len(adj[u]) >= dv and reduce_domination_adjacent(g, u, v, self.trace):
                touched = set(av) | adj[u]
                touched.update((u, v))
                return 0, 1, touched
        return None

    # -- bookkeeping --

    def _improved(self):
        if not self.config.resweep_on_improvement:
            return
        alive = None
        for r in self.rules:
            if r.name in BOUND_RULES:
                if alive is None:
                    alive = set(self.g.vertices())
                r.paused = False
                r.viable = set(alive)

    def requeue(self, vertices):
        alive = self.g.alive
        vs = [v for v in vertices if alive[v]]
        for r in self.rules:
            r.viable.update(vs)

    def _eligible(self, r: _RuleState) -> list:
        g = self.g
        alive, adj = g.alive, g.adj
        dead = [v for v in r.viable if not alive[v]]
        r.viable.difference_update(dead)
        if self.cap is None:
            return sorted(r.viable)
        cap = self.cap
        return sorted(v for v in r.viable if len(adj[v]) <= cap)

    def _size(self) -> int:
        return self.g.n + self.g.m

    def _run_pass(self, r: _RuleState, eligible: list) -> bool:
        """Apply rule ``r`` once to each eligible vertex. Returns True if it got paused."""
        g, clock = self.g, self.clock
        apply = self._apply[r.name]
        threshold = self.config.rate_threshold * self._size()
        start = clock.now()
        removed = 0
        paused = False
        alive, adj = g.alive, g.adj
        for i, v in enumerate(eligible):
            if not alive[v] or v not in r.viable:
                continue
            r.viable.discard(v)
            clock.tick(1 + len(adj[v]))
            out = apply(v)
            if out is not None:
                dv, de, touched = out
                removed += dv + de
                r.stats.vertices += dv
                r.stats.edges += de
                r.stats.applications += 1
                self.removed_total += dv + de
                self.requeue(touched)
            if i and i % MID_PASS_CHECK_EVERY == 0:
                elapsed = clock.now() - start
                if elapsed >= 10 * MIN_SAMPLE_SECONDS and removed / elapsed < threshold:
                    paused = True
                    break
        elapsed = clock.now() - start
        r.stats.seconds += elapsed
        if not paused and removed / max(elapsed, MIN_SAMPLE_SECONDS) < threshold:
            # nothing left to try means exhausted, not paused
            paused = bool(r.viable)
        if paused:
            r.paused = True
            r.pause_baseline = self.removed_total
            r.pause_amount = threshold
            r.stats.pauses += 1
        return paused

    def _local_search(self):
        g = self.g
        if g.n == 0:
            return
        start = []
        for v in sorted(self.incumbent.members):
            if v < g.capacity and g.alive[v] and all(v in g.adj[u] for u in start):
                start.append(v)
        start_clique = Clique.of(g, start)
        found = local_search_improve(g, start_clique, self.config.local_search, self.rng, self.clock)
        if found.weight > self.incumbent.weight:
            lifted = reconstruct(self.trace, found)
            if self.incumbent.offer(lifted):
                self._improved()

    def run(self, degree_limit: Optional[bool] = None) -> ReduceResult:
        g = self.g
        limit = self.config.degree_limit_enabled if degree_limit is None else degree_limit
        delta0 = g.max_degree()
        level = 1
        if limit and delta0 > 0:
            fraction = self.config.initial_degree_fraction
            self.cap = fraction * delta0
        else:
            fraction = 1.0
            self.cap = None
        while True:
            progressed = False
            for r in self.rules:
                if not r.paused:
                    eligible = self._eligible(r)
                    if eligible:
                        self.passes += 1
                        self._run_pass(r, eligible)
                        progressed = True
                        if self.config.ls_interleave:
                            self._local_search()
                elif self.removed_total - r.pause_baseline >= r.pause_amount:
                    r.paused = False
                    progressed = True
            if progressed:
                continue
            # every rule is paused or has nothing eligible at this level
            if self.cap is not None:
                fraction += self.config.degree_fraction_step
                level += 1
                self.cap = fraction * delta0 if fraction < 1.0 - 1e-12 else None
                for r in self.rules:
                    r.paused = False
                continue
            break
        return ReduceResult(g, self.incumbent.clique, self.trace, self.stats(), level)

    def stats(self) -> dict:
        return {
            "kernel_n": self.g.n,
            "kernel_m": self.g.m,
            "w_best": self.incumbent.weight,
            "passes": self.passes,
            "trace_length": len(self.trace),
            "rules": {r.name: vars(r.stats).copy() for r in self.rules},
        }


def reduce(
    g: WeightedGraph,
    best: Optional[Clique] = None,
    config: Optional[SchedulerConfig] = None,
    clock=None,
    trace: Optional[ReductionTrace] = None,
) -> ReduceResult:
    """Reduce ``g`` in place until no rule applies; ``best`` must be valid in ``g``."""
    clock = clock or WallClock()
    incumbent = Incumbent(best, clock)
    reducer = Reducer(g, incumbent, config, trace=trace, clock=clock)
    return reducer.run()
