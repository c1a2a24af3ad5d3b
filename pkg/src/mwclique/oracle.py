"""Exhaustive maximum weight clique, the reference every test compares against."""
from __future__ import annotations

from .graph import Clique, GraphError, WeightedGraph

MAX_ORACLE_N = 35


def brute_force_opt(g: WeightedGraph, within=None) -> Clique:
    """Heaviest clique, lexicographically smallest among equally heavy ones.

    Plain enumeration in increasing id order, pruned only when the current
    weight plus all remaining candidates cannot beat the best. ``within``
    restricts the search to a vertex subset.
    """
    vs = sorted(g.vertices() if within is None else within)
    if len(vs) > MAX_ORACLE_N:
        raise GraphError(f"oracle limited to {MAX_ORACLE_N} vertices, got {len(vs)}")
    weight, adj = g.weight, g.adj
    best_w = 0
    best: tuple = ()

    def expand(clique: list, cw: int, cand: list):
        nonlocal best_w, best
        if cw > best_w:
            best_w, best = cw, tuple(clique)
        rest = sum(weight[v] for v in cand)
        for i, v in enumerate(cand):
            if cw + rest <= best_w:
                return
            rest -= weight[v]
            av = adj[v]
            clique.append(v)
            expand(clique, cw + weight[v], [u for u in cand[i + 1:] if u in av])
            clique.pop()

    expand([], 0, vs)
    return Clique(frozenset(best), best_w)


def max_clique_through(g: WeightedGraph, v: int, within=None) -> int:
    """Weight of the heaviest clique containing ``v`` (inside ``within`` if given)."""
    pool = g.adj[v] if within is None else [u for u in within if u in g.adj[v]]
    return g.weight[v] + brute_force_opt(g, pool).weight
