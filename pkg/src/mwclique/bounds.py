"""Lower and upper bounds: degeneracy-peeling start clique, local search, coloring bound."""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Clique, WeightedGraph


@dataclass
class ColorPartition:
    classes: list = field(default_factory=list)
    maxw: list = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.classes)

    def bound(self) -> int:
        return sum(self.maxw)


@dataclass
class LocalSearchConfig:
    bms_k: int = 64
    step_budget: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.bms_k < 1:
            raise ValueError("bms_k must be >= 1")
        if self.step_budget < 0:
            raise ValueError("step_budget must be >= 0")


def initial_clique(g: WeightedGraph) -> Clique:
    """Peel minimum-degree vertices until the remainder is a clique."""
    if g.n == 0:
        return Clique.empty()
    adj = g.adj
    deg = [len(s) for s in adj]
    heap = [(deg[v], v) for v in g.vertices()]
    heapq.heapify(heap)
    gone = bytearray(g.capacity)
    r, mr = g.n, g.m
    while mr != r * (r - 1) // 2:
        d, v = heapq.heappop(heap)
        if gone[v] or d != deg[v]:
            continue
        gone[v] = 1
        r -= 1
        mr -= d
        for u in adj[v]:
            if not gone[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return Clique.of(g, (v for v in g.vertices() if not gone[v]))


def _common_neighbors(g: WeightedGraph, members) -> set:
    members = sorted(members, key=lambda v: len(g.adj[v]))
    if not members:
        return set()
    common = set(g.adj[members[0]])
    for v in members[1:]:
        common &= g.adj[v]
    return common


def _bms_pick(rng: random.Random, pool: list, k: int, key):
    if len(pool) > k:
        pool = rng.sample(pool, k)
    return max(pool, key=key)


def local_search_improve(
    g: WeightedGraph,
    start: Clique,
    config: Optional[LocalSearchConfig] = None,
    rng: Optional[random.Random] = None,
    clock=None,
) -> Clique:
    """Add / swap / perturb local search with best-from-multiple-selection sampling.

    Never returns something lighter than ``start``.
    """
    config = config or LocalSearchConfig()
    if config.step_budget == 0 or g.n == 0:
        return start
    rng = rng or random.Random(config.seed)
    adj, weight = g.adj, g.weight
    best = start
    current = set(start.members)
    if not current:
        current = {max(g.vertices(), key=lambda v: (g.nw[v], -v))}
    wc = sum(weight[v] for v in current)
    if wc > best.weight:
        best = Clique(frozenset(current), wc)
    add = _common_neighbors(g, current)
    cap = g.capacity
    by_weight = lambda v: (weight[v], -v)

    for _ in range(config.step_budget):
        if clock is not None:
            clock.tick(len(current) + len(add) + 1)
        if add:
            v = _bms_pick(rng, list(add), config.bms_k, by_weight)
            current.add(v)
            wc += weight[v]
            add &= adj[v]
        else:
            size = len(current)
            counts: dict = {}
            for c in current:
                for x in adj[c]:
                    counts[x] = counts.get(x, 0) + 1
            swaps = []
            for x, cnt in counts.items():
                if cnt == size - 1 and x not in current:
                    out = next(c for c in current if c not in adj[x])
                    if weight[x] > weight[out]:
                        swaps.append((x, out))
            if size == 1:
                swaps = []
            if swaps:
                x, out = _bms_pick(rng, swaps, config.bms_k, lambda s: (weight[s[0]] - weight[s[1]], -s[0], -s[1]))
                current.discard(out)
                current.add(x)
                wc += weight[x] - weight[out]
            else:
                y = None
                for _attempt in range(32):
                    cand = rng.randrange(cap)
                    if g.alive[cand] and cand not in current:
                        y = cand
                        break
                if y is None:
                    rest = [v for v in g.vertices() if v not in current]
                    if not rest:
                        break
                    y = rng.choice(rest)
                current = {c for c in current if c in adj[y]}
                current.add(y)
                wc = sum(weight[v] for v in current)
            add = _common_neighbors(g, current)
        if wc > best.weight:
            best = Clique(frozenset(current), wc)
    return best


def greedy_coloring(g: WeightedGraph, candidates: Iterable[int]) -> ColorPartition:
    """First-fit coloring of ``candidates`` in descending weight order (id tie-break)."""
    weight, adj = g.weight, g.adj
    order = sorted(candidates, key=lambda v: (-weight[v], v))
    classes: list = []
    sets: list = []
    maxw: list = []
    for v in order:
        av = adj[v]
        for j, s in enumerate(sets):
            if av.isdisjoint(s):
                s.add(v)
                classes[j].append(v)
                break
        else:
            sets.append({v})
            classes.append([v])
            # descending order: the first vertex of a class is its heaviest
            maxw.append(weight[v])
    return ColorPartition(classes, maxw)


def coloring_upper_bound(p: ColorPartition) -> int:
    return p.bound()
