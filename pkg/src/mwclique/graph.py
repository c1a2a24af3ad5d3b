"""Mutable vertex-weighted undirected graph.

Vertex ids are dense 0-based integers. Deleted vertices are tombstoned (they
keep their id, lose all edges and are flagged dead) so that ids stay stable
while reductions run; :func:`compact` renumbers the survivors.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised on invalid use of the graph API (dead vertex, bad twin pair...)."""


@dataclass(frozen=True)
class Clique:
    members: frozenset
    weight: int

    @classmethod
    def of(cls, g: "WeightedGraph", members: Iterable[int]) -> "Clique":
        members = frozenset(members)
        return cls(members, sum(g.weight[v] for v in members))

    @classmethod
    def empty(cls) -> "Clique":
        return cls(frozenset(), 0)

    def __len__(self):
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


class WeightedGraph:
    """Undirected graph with positive integer vertex weights.

    ``nw[v]`` caches ``w(N[v])`` and is kept exact by every mutator.
    """

    __slots__ = ("weight", "adj", "alive", "nw", "n", "m")

    def __init__(self, weights: Sequence[int]):
        for w in weights:
            if w <= 0:
                raise GraphError(f"weights must be positive, got {w}")
        self.weight = [int(w) for w in weights]
        self.adj = [set() for _ in self.weight]
        self.alive = [True] * len(self.weight)
        self.nw = list(self.weight)
        self.n = len(self.weight)
        self.m = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], weights=None) -> "WeightedGraph":
        g = cls([1] * n if weights is None else weights)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @property
    def capacity(self) -> int:
        """Number of ids ever allocated, dead ones included."""
        return len(self.weight)

    def _check(self, v: int):
        if not (0 <= v < len(self.weight)) or not self.alive[v]:
            raise GraphError(f"vertex {v} is not an alive vertex")

    def add_edge(self, u: int, v: int):
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop on vertex {u}")
        if v in self.adj[u]:
            raise GraphError(f"duplicate edge {{{u}, {v}}}")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.nw[u] += self.weight[v]
        self.nw[v] += self.weight[u]
        self.m += 1

    def vertices(self) -> list[int]:
        alive = self.alive
        return [v for v in range(len(alive)) if alive[v]]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices() for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(self.adj[v]) for v in self.vertices()), default=0)

    def is_adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    def neighborhood_intersection(self, u: int, v: int) -> set:
        self._check(u)
        self._check(v)
        return self.adj[u] & self.adj[v]

    def common_weight(self, u: int, v: int) -> int:
        """``w(N(u) ∩ N(v))`` without building the intersection twice."""
        a, b = self.adj[u], self.adj[v]
        if len(a) > len(b):
            a, b = b, a
        weight = self.weight
        return sum(weight[x] for x in a if x in b)

    def set_weight(self, v: int, w: int):
        self._check(v)
        if w <= 0:
            raise GraphError(f"weights must be positive, got {w}")
        delta = w - self.weight[v]
        self.weight[v] = w
        self.nw[v] += delta
        nw = self.nw
        for u in self.adj[v]:
            nw[u] += delta

    def remove_edge(self, u: int, v: int):
        self._check(u)
        self._check(v)
        if v not in self.adj[u]:
            raise GraphError(f"no edge {{{u}, {v}}}")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.nw[u] -= self.weight[v]
        self.nw[v] -= self.weight[u]
        self.m -= 1

    def remove_vertex(self, v: int):
        self._check(v)
        wv = self.weight[v]
        nw = self.nw
        for u in self.adj[v]:
            self.adj[u].discard(v)
            nw[u] -= wv
        self.m -= len(self.adj[v])
        self.adj[v] = set()
        self.alive[v] = False
        self.nw[v] = 0
        self.n -= 1

    def is_twin(self, u: int, v: int) -> bool:
        """True iff ``N[u] == N[v]`` (which implies adjacency)."""
        au, av = self.adj[u], self.adj[v]
        if v not in au or len(au) != len(av):
            return False
        return all(x == u or x in au for x in av)

    def contract_twins(self, u: int, v: int) -> int:
        """Merge twin ``v`` into ``u``; returns the survivor ``u``."""
        self._check(u)
        self._check(v)
        if not self.is_twin(u, v):
            raise GraphError(f"{u} and {v} are not twins")
        wv = self.weight[v]
        self.remove_vertex(v)
        self.set_weight(u, self.weight[u] + wv)
        return u

    def copy(self) -> "WeightedGraph":
        g = WeightedGraph.__new__(WeightedGraph)
        g.weight = list(self.weight)
        g.adj = [set(s) for s in self.adj]
        g.alive = list(self.alive)
        g.nw = list(self.nw)
        g.n = self.n
        g.m = self.m
        return g

    def state(self) -> tuple:
        """Hashable snapshot of the full state, used to compare graphs exactly."""
        return (
            tuple(self.weight),
            tuple(tuple(sorted(s)) for s in self.adj),
            tuple(self.alive),
            tuple(self.nw),
            self.n,
            self.m,
        )

    def induced(self, vertices: Iterable[int]) -> tuple["WeightedGraph", list[int]]:
        """Dense copy of the subgraph induced by ``vertices`` plus the id map new -> old."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        h = WeightedGraph([self.weight[v] for v in old])
        for v in old:
            h.adj[index[v]] = {index[u] for u in self.adj[v] if u in index}
        h.m = sum(len(s) for s in h.adj) // 2
        h.nw = [h.weight[i] + sum(h.weight[j] for j in h.adj[i]) for i in range(len(old))]
        return h, old

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"


def compact(g: WeightedGraph) -> tuple[WeightedGraph, list[int]]:
    """Renumber alive vertices densely; returns the new graph and new -> old ids."""
    return g.induced(g.vertices())


def validate_clique(g: WeightedGraph, c: Clique) -> bool:
    members = list(c.members)
    for v in members:
        if not (0 <= v < g.capacity) or not g.alive[v]:
            return False
    for i, u in enumerate(members):
        au = g.adj[u]
        for v in members[i + 1:]:
            if v not in au:
                return False
    return c.weight == sum(g.weight[v] for v in members)


def degeneracy_ordering(g: WeightedGraph) -> list[int]:
    """Min-degree peeling order with smallest-id tie-break."""
    deg = {v: len(g.adj[v]) for v in g.vertices()}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed = set()
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue
        removed.add(v)
        order.append(v)
        for u in g.adj[v]:
            if u not in removed:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order
