"""Exact reduction rules for maximum weight clique.

Every rule checks its precondition first and leaves the graph untouched when
it does not apply. Successful applications append events to a
:class:`ReductionTrace`, which :func:`reconstruct` replays backwards to turn a
clique of the reduced graph into a clique of the input graph.

Vertex ids never change during reduction (dead vertices are tombstoned), so a
kernel vertex id is also an input vertex id.
"""
from __future__ import annotations

from typing import NamedTuple, Optional

from .graph import Clique, GraphError, WeightedGraph, validate_clique


class VertexRemoved(NamedTuple):
    v: int


class EdgeRemoved(NamedTuple):
    u: int
    v: int


class TwinContracted(NamedTuple):
    survivor: int
    absorbed: int


class WeightTransferred(NamedTuple):
    v: int
    donor: int


class SimplicialRemoved(NamedTuple):
    v: int


class ReductionTrace:
    """Append-only event log plus the input weights needed to price lifted cliques."""

    def __init__(self, input_weights=None):
        self.events: list = []
        self.input_weights = None if input_weights is None else list(input_weights)

    @classmethod
    def for_graph(cls, g: WeightedGraph) -> "ReductionTrace":
        return cls(g.weight)

    def append(self, event):
        self.events.append(event)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def copy(self) -> "ReductionTrace":
        t = ReductionTrace.__new__(ReductionTrace)
        t.events = list(self.events)
        t.input_weights = self.input_weights
        return t


class Incumbent:
    """The best clique found so far, always expressed in input-graph ids."""

    def __init__(self, clique: Optional[Clique] = None, clock=None):
        self.clique = clique if clique is not None else Clique.empty()
        self.clock = clock
        self.found_at = clock.now() if clock is not None else 0.0

    @property
    def weight(self) -> int:
        return self.clique.weight

    @property
    def members(self) -> frozenset:
        return self.clique.members

    def offer(self, clique: Clique) -> bool:
        if clique.weight > self.clique.weight:
            self.clique = clique
            if self.clock is not None:
                self.found_at = self.clock.now()
            return True
        return False


def reconstruct(trace: ReductionTrace, kernel_clique: Clique, kernel: Optional[WeightedGraph] = None) -> Clique:
    """Lift a clique of the reduced graph back to the input graph.

    When ``kernel`` is given the clique is validated against it first.
    """
    if kernel is not None and not validate_clique(kernel, kernel_clique):
        raise GraphError("kernel clique is not a valid clique of the kernel")
    members = set(kernel_clique.members)
    for event in reversed(trace.events):
        if type(event) is TwinContracted:
            if event.survivor in members:
                members.add(event.absorbed)
        elif type(event) is WeightTransferred:
            if event.v in members and event.donor not in members:
                members.add(event.donor)
    if trace.input_weights is None:
        return Clique(frozenset(members), kernel_clique.weight)
    w = trace.input_weights
    return Clique(frozenset(members), sum(w[v] for v in members))


def _remove(g: WeightedGraph, v: int, trace: ReductionTrace):
    g.remove_vertex(v)
    trace.append(VertexRemoved(v))


def reduce_neighborhood_weight(g: WeightedGraph, v: int, best, trace: ReductionTrace) -> bool:
    if g.nw[v] <= best.weight:
        _remove(g, v, trace)
        return True
    return False


def largest_weight_neighbor(g: WeightedGraph, v: int) -> int:
    weight = g.weight
    return min(g.adj[v], key=lambda u: (-weight[u], u))


def reduce_largest_weight_neighbor(g: WeightedGraph, v: int, best, trace: ReductionTrace) -> bool:
    if v in best.members or not g.adj[v]:
        return False
    u = largest_weight_neighbor(g, v)
    excluding = g.nw[v] - g.weight[u]
    including = g.weight[v] + g.weight[u] + g.common_weight(v, u)
    if max(excluding, including) <= best.weight:
        _remove(g, v, trace)
        return True
    return False


def reduce_twin(g: WeightedGraph, v: int, trace: ReductionTrace) -> bool:
    dv = len(g.adj[v])
    for u in sorted(g.adj[v]):
        if len(g.adj[u]) == dv and g.is_twin(u, v):
            survivor, absorbed = min(u, v), max(u, v)
            g.contract_twins(survivor, absorbed)
            trace.append(TwinContracted(survivor, absorbed))
            return True
    return False


def find_nonadjacent_dominator(g: WeightedGraph, v: int) -> Optional[int]:
    """A non-neighbour ``u`` with ``N(v) ⊆ N(u)`` and ``w(v) <= w(u)``, via a two-hop scan."""
    av = g.adj[v]
    if not av:
        return None
    adj, weight = g.adj, g.weight
    dv, wv = len(av), weight[v]
    x = min(av, key=lambda y: (len(adj[y]), y))
    for u in sorted(adj[x]):
        if u == v or u in av:
            continue
        au = adj[u]
        if len(au) < dv or weight[u] < wv:
            continue
        if av <= au:
            # mutual domination: the larger id is the one removed
            if weight[u] == wv and len(au) == dv and u > v:
                continue
            return u
    return None


def reduce_domination_nonadjacent(g: WeightedGraph, v: int, trace: ReductionTrace) -> bool:
    if find_nonadjacent_dominator(g, v) is None:
        return False
    _remove(g, v, trace)
    return True


def reduce_domination_adjacent(g: WeightedGraph, u: int, v: int, trace: ReductionTrace) -> bool:
    """If ``N(v) ⊆ N[u]`` move ``w(u)`` onto ``v`` and drop the edge ``{u, v}``."""
    au, av = g.adj[u], g.adj[v]
    if u not in av:
        raise GraphError(f"no edge {{{u}, {v}}}")
    if len(au) < len(av) or len(av - au) != 1:
        return False
    g.set_weight(v, g.weight[v] + g.weight[u])
    trace.append(WeightTransferred(v, u))
    g.remove_edge(u, v)
    trace.append(EdgeRemoved(u, v))
    return True


def reduce_edge_bounding(g: WeightedGraph, v: int, best, trace: ReductionTrace) -> int:
    removed = 0
    target = best.weight
    weight = g.weight
    wv = weight[v]
    for u in sorted(g.adj[v]):
        if wv + weight[u] + g.common_weight(v, u) < target:
            g.remove_edge(v, u)
            trace.append(EdgeRemoved(v, u))
            removed += 1
    return removed


def is_simplicial(g: WeightedGraph, v: int) -> bool:
    av = g.adj[v]
    adj = g.adj
    dv = len(av)
    for x in av:
        ax = adj[x]
        # x itself is the only member of N(v) allowed outside N(x)
        if len(ax) < dv or len(av - ax) != 1:
            return False
    return True


def reduce_simplicial(g: WeightedGraph, v: int, incumbent: Incumbent, trace: ReductionTrace) -> bool:
    if not is_simplicial(g, v):
        return False
    if g.nw[v] > incumbent.weight:
        closed = g.adj[v] | {v}
        incumbent.offer(reconstruct(trace, Clique(frozenset(closed), g.nw[v])))
    g.remove_vertex(v)
    trace.append(SimplicialRemoved(v))
    return True
