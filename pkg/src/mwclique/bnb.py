"""Exact branch and bound for maximum weight clique.

The root branches over a degeneracy ordering. At every node the candidate set
is colored greedily; color classes become weighted soft sets ("a clique takes
at most one vertex of this set"), and three filters shrink the set of
branching vertices:

1. binary MaxSAT: vertices whose weight can be spread over existing sets (or
   opened as a new set) while the bound stays under the target are absorbed;
2. ordered MaxSAT: for a surviving vertex ``v`` with leftover weight, triples
   ``{v}, U, D`` where ``U`` holds exactly one neighbour ``u`` of ``v`` and ``D``
   holds nothing adjacent to both are conflicting and relieve the bound;
3. unit propagation over the soft sets finds further conflicting groups.

Every conflict relief of ``beta`` splits each set of the group into a locked
part of top weight ``beta`` (the conflict) and an open remainder.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional

from .bounds import ColorPartition, greedy_coloring
from .clock import WallClock
from .graph import Clique, WeightedGraph, compact, degeneracy_ordering

DEADLINE_CHECK_EVERY = 1024


class SoftSetSystem:
    """Weighted independent sets with per-vertex contributions and an undo journal.

    ``sets[j]`` maps vertex -> contribution, ``top[j]`` is the largest
    contribution, ``ub`` is the current bound (sum of tops minus reliefs).
    """

    def __init__(self):
        self.sets: list = []
        self.top: list = []
        self.locked: list = []
        self.ub = 0
        self.relief = 0
        self._journal: list = []

    def add_set(self, contrib: dict, locked: bool = False) -> int:
        self.sets.append(contrib)
        t = max(contrib.values()) if contrib else 0
        self.top.append(t)
        self.locked.append(locked)
        self.ub += t
        self._journal.append(("new",))
        return len(self.sets) - 1

    def place(self, v: int, j: int, amount: int):
        assert 0 < amount <= self.top[j] and v not in self.sets[j]
        self.sets[j][v] = amount
        self._journal.append(("place", j, v))

    def split(self, j: int, beta: int) -> int:
        """Cut ``beta`` off every contribution of set ``j`` into a new locked set."""
        old = self.sets[j]
        old_top = self.top[j]
        assert 0 < beta <= old_top
        self.sets[j] = {x: c - beta for x, c in old.items() if c > beta}
        self.top[j] = old_top - beta
        self._journal.append(("split", j, old, old_top))
        self.sets.append({x: min(c, beta) for x, c in old.items()})
        self.top.append(beta)
        self.locked.append(True)
        return len(self.sets) - 1

    def relieve(self, beta: int):
        self.ub -= beta
        self.relief += beta

    def open_sets(self) -> list:
        return [j for j, s in enumerate(self.sets) if s and not self.locked[j]]

    def mark(self) -> tuple:
        return len(self._journal), self.ub, self.relief

    def rollback(self, mark: tuple):
        size, ub, relief = mark
        journal = self._journal
        while len(journal) > size:
            op = journal.pop()
            if op[0] == "new":
                self.sets.pop()
                self.top.pop()
                self.locked.pop()
            elif op[0] == "place":
                del self.sets[op[1]][op[2]]
            else:
                _, j, old, old_top = op
                self.sets.pop()
                self.top.pop()
                self.locked.pop()
                self.sets[j] = old
                self.top[j] = old_top
        self.ub, self.relief = ub, relief

    def contribution(self, v: int) -> int:
        return sum(s.get(v, 0) for s in self.sets)

    def vertices(self) -> set:
        out = set()
        for s in self.sets:
            out.update(s)
        return out


def split_into_sets(g: WeightedGraph, v: int, system: SoftSetSystem, amount: Optional[int] = None):
    """Spread ``v``'s weight over open sets holding none of its neighbours.

    Returns the leftover weight and the indices of the sets that received a share.
    """
    rem = g.weight[v] if amount is None else amount
    av = g.adj[v]
    hosts = []
    sets, top, locked = system.sets, system.top, system.locked
    for j in range(len(sets)):
        if rem == 0:
            break
        s = sets[j]
        if locked[j] or not s or v in s or not av.isdisjoint(s):
            continue
        t = min(rem, top[j])
        system.place(v, j, t)
        hosts.append(j)
        rem -= t
    return rem, hosts


def binary_maxsat_filter(g: WeightedGraph, partition: ColorPartition, limit: int):
    """Absorb as many candidates as possible into soft sets with bound ``<= limit``.

    ``limit`` is the weight a clique of the candidates must beat (``w(Ĉ)`` at the
    root, ``w(Ĉ) - w(C)`` deeper). Returns the branching vertices (in processing
    order) and the soft-set system proving the absorbed vertices cannot beat it.
    """
    system = SoftSetSystem()
    weight = g.weight
    deferred = []
    for cls, mw in zip(partition.classes, partition.maxw):
        if system.ub + mw <= limit:
            system.add_set({v: weight[v] for v in cls})
        else:
            deferred.extend(cls)
    branching = []
    for v in deferred:
        mark = system.mark()
        rem, _ = split_into_sets(g, v, system)
        if rem == 0:
            continue
        if system.ub + rem <= limit:
            system.add_set({v: rem})
            continue
        system.rollback(mark)
        branching.append(v)
    return branching, system


def ordered_maxsat_reasoning(g: WeightedGraph, v: int, unit: int, hosts, system: SoftSetSystem, limit: int) -> bool:
    """Relieve the bound through conflicting triples ``{v}, U, D``.

    ``unit`` is the index of the set holding ``v``'s leftover weight and
    ``hosts`` the sets that took a share of it. Returns True once the bound is
    at most ``limit``. Leaves its splits in place; the caller rolls back.
    """
    adj = g.adj
    av = adj[v]
    hosts = set(hosts)
    sets, top, locked = system.sets, system.top, system.locked
    while system.ub > limit and top[unit] > 0:
        triple = None
        candidates = [j for j in range(len(sets)) if sets[j] and not locked[j] and j != unit and j not in hosts]
        for j in candidates:
            inside = [x for x in sets[j] if x in av]
            if len(inside) != 1:
                continue
            u = inside[0]
            common = av & adj[u]
            for q in candidates:
                if q == j:
                    continue
                d = sets[q]
                if u in d or v in d:
                    continue
                if common.isdisjoint(d):
                    triple = (j, q)
                    break
            if triple:
                break
        if triple is None:
            break
        j, q = triple
        beta = min(top[unit], top[j], top[q])
        for idx in (unit, j, q):
            system.split(idx, beta)
        system.relieve(beta)
    return system.ub <= limit


def _find_conflict(g: WeightedGraph, system: SoftSetSystem) -> Optional[set]:
    """Unit propagation over the open sets; returns a conflicting group or None."""
    adj = g.adj
    active = system.open_sets()
    lits = {j: set(system.sets[j]) for j in active}
    reasons = {j: set() for j in active}
    satisfied: dict = {}
    heap = [(1, j) for j in active if len(lits[j]) == 1]
    heapq.heapify(heap)
    while heap:
        _, c = heapq.heappop(heap)
        if c in satisfied or len(lits[c]) != 1:
            continue
        (y,) = lits[c]
        satisfied[c] = y
        ay = adj[y]
        for d in active:
            if d in satisfied:
                continue
            lit = lits[d]
            if y in lit:
                satisfied[d] = y
                continue
            drop = [x for x in lit if x not in ay]
            if not drop:
                continue
            lit.difference_update(drop)
            reasons[d].add(c)
            if not lit:
                group = {d}
                stack = [d]
                while stack:
                    for r in reasons[stack.pop()]:
                        if r not in group:
                            group.add(r)
                            stack.append(r)
                return group
            if len(lit) == 1:
                heapq.heappush(heap, (1, d))
    return None


def unit_propagation_conflicts(g: WeightedGraph, system: SoftSetSystem, limit: int) -> int:
    """Repeatedly find conflicting groups by unit propagation; returns the total relief."""
    total = 0
    while system.ub > limit:
        group = _find_conflict(g, system)
        if group is None:
            break
        delta = min(system.top[j] for j in group)
        for j in sorted(group):
            system.split(j, delta)
        system.relieve(delta)
        total += delta
    return total


def filter_vertex(
    g: WeightedGraph,
    v: int,
    system: SoftSetSystem,
    limit: int,
    ordered: bool = True,
    propagate: bool = True,
) -> Optional[str]:
    """Try to absorb branching vertex ``v``; returns the stage that did it, or None.

    On failure the system is restored exactly.
    """
    mark = system.mark()
    rem, hosts = split_into_sets(g, v, system)
    if rem == 0:
        return "split"
    unit = system.add_set({v: rem})
    if system.ub <= limit:
        return "split"
    if ordered and ordered_maxsat_reasoning(g, v, unit, hosts, system, limit):
        return "ordered"
    if propagate:
        unit_propagation_conflicts(g, system, limit)
        if system.ub <= limit:
            return "propagation"
    system.rollback(mark)
    return None


@dataclass
class PipelineResult:
    absorbed: list
    branching: list
    system: Optional[SoftSetSystem]
    by_stage: dict = field(default_factory=dict)


def branching_pipeline(
    g: WeightedGraph,
    candidates,
    limit: int,
    maxsat: bool = True,
    ordered: bool = True,
    propagate: bool = True,
    partition: Optional[ColorPartition] = None,
) -> PipelineResult:
    """Split ``candidates`` into absorbed vertices (no clique among them beats
    ``limit``) and branching vertices."""
    if partition is None:
        partition = greedy_coloring(g, candidates)
    by_stage = {"coloring": 0, "binary": 0, "ordered": 0, "propagation": 0}
    if not maxsat:
        ub = 0
        absorbed, branching = [], []
        for cls, mw in zip(partition.classes, partition.maxw):
            if ub + mw <= limit:
                ub += mw
                absorbed.extend(cls)
            else:
                branching.extend(cls)
        by_stage["coloring"] = len(absorbed)
        return PipelineResult(absorbed, branching, None, by_stage)
    first, system = binary_maxsat_filter(g, partition, limit)
    kept = set(first)
    absorbed = [v for cls in partition.classes for v in cls if v not in kept]
    by_stage["binary"] = len(absorbed)
    branching = []
    if ordered or propagate:
        for v in first:
            stage = filter_vertex(g, v, system, limit, ordered, propagate)
            if stage is None:
                branching.append(v)
            else:
                absorbed.append(v)
                by_stage["ordered" if stage == "ordered" else "propagation" if stage == "propagation" else "binary"] += 1
    else:
        branching = first
    return PipelineResult(absorbed, branching, system, by_stage)


class _Timeout(Exception):
    pass


@dataclass
class SolveResult:
    clique: Optional[Clique]
    proven: bool
    found_at: Optional[float]
    finished_at: float
    stats: dict


class _Search:
    def __init__(self, g: WeightedGraph, lower: int, clock, deadline, maxsat, ordered, propagate):
        self.g = g
        self.best_w = lower
        self.best: Optional[list] = None
        self.found_at: Optional[float] = None
        self.clock = clock
        self.deadline = deadline
        self.maxsat, self.ordered, self.propagate = maxsat, ordered, propagate
        self.nodes = 0
        self.filtered = {"coloring": 0, "binary": 0, "ordered": 0, "propagation": 0}

    def expand(self, cw: int, clique: list, cand: list):
        self.nodes += 1
        clock = self.clock
        clock.tick(len(cand) + 1)
        if self.deadline is not None and self.nodes % DEADLINE_CHECK_EVERY == 0 and clock.now() >= self.deadline:
            raise _Timeout
        if cw > self.best_w:
            self.best_w = cw
            self.best = list(clique)
            self.found_at = clock.now()
        if not cand:
            return
        g = self.g
        weight, adj = g.weight, g.adj
        limit = self.best_w - cw
        if sum(weight[v] for v in cand) <= limit:
            return
        partition = greedy_coloring(g, cand)
        if partition.bound() <= limit:
            return
        res = branching_pipeline(g, cand, limit, self.maxsat, self.ordered, self.propagate, partition)
        for k, x in res.by_stage.items():
            self.filtered[k] += x
        pool = set(cand)
        branching = res.branching
        # last kept first; each branch may only use earlier branching vertices
        for i in range(len(branching) - 1, -1, -1):
            b = branching[i]
            pool.discard(b)
            sub = [x for x in pool if x in adj[b]]
            clique.append(b)
            self.expand(cw + weight[b], clique, sub)
            clique.pop()

    def run(self):
        g = self.g
        order = degeneracy_ordering(g)
        pos = {v: i for i, v in enumerate(order)}
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            later = [u for u in g.adj[v] if pos[u] > i]
            self.expand(g.weight[v], [v], later)


def solve_exact(
    g: WeightedGraph,
    best: Optional[Clique] = None,
    lower_bound: int = 0,
    time_limit: Optional[float] = None,
    clock=None,
    maxsat: bool = True,
    ordered: bool = True,
    propagate: bool = True,
) -> SolveResult:
    """Maximum weight clique of ``g`` by branch and bound.

    Searches for cliques strictly heavier than ``max(w(best), lower_bound)``.
    The returned clique is ``best`` when nothing heavier exists, or None when
    no ``best`` was given and nothing beats ``lower_bound``. ``proven`` is False
    when ``time_limit`` (seconds on ``clock``) ran out first.
    """
    clock = clock or WallClock()
    deadline = None if time_limit is None else clock.now() + time_limit
    dense = g.n == g.capacity
    h, old = (g, None) if dense else compact(g)
    lower = max(lower_bound, best.weight if best is not None else 0)
    search = _Search(h, lower, clock, deadline, maxsat, ordered, propagate)
    proven = True
    try:
        search.run()
    except _Timeout:
        proven = False
    stats = {"nodes": search.nodes, "filtered": dict(search.filtered)}
    if search.best is None:
        return SolveResult(best, proven, None, clock.now(), stats)
    members = search.best if old is None else [old[v] for v in search.best]
    return SolveResult(Clique.of(g, members), proven, search.found_at, clock.now(), stats)
