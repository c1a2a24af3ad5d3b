"""Seeded synthetic instances for tests, experiments and benchmarks."""
from __future__ import annotations

from .graph import WeightedGraph
from .rng import Xoshiro256


def _weights(r: Xoshiro256, n: int, lo: int = 1, hi: int = 200) -> list:
    return [r.randint(lo, hi) for _ in range(n)]


def _build(n: int, edges, weights) -> WeightedGraph:
    g = WeightedGraph(weights)
    adj = g.adj
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    g.m = sum(len(s) for s in adj) // 2
    g.nw = [weights[i] + sum(weights[j] for j in adj[i]) for i in range(n)]
    return g


def gnp(n: int, p: float, seed: int, lo: int = 1, hi: int = 200) -> WeightedGraph:
    """Erdős–Rényi G(n, p) with uniform integer weights in ``[lo, hi]``."""
    r = Xoshiro256(seed)
    weights = _weights(r, n, lo, hi)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if r.random() < p]
    return _build(n, edges, weights)


def gnm(n: int, m: int, seed: int, lo: int = 1, hi: int = 200) -> WeightedGraph:
    """Uniform random graph with exactly ``m`` edges."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges")
    r = Xoshiro256(seed)
    weights = _weights(r, n, lo, hi)
    seen = set()
    while len(seen) < m:
        u = r.randint(0, n - 1)
        v = r.randint(0, n - 1)
        if u != v:
            seen.add((u, v) if u < v else (v, u))
    return _build(n, sorted(seen), weights)


def planted_clique(n: int, avg_degree: float, clique_size: int, seed: int, lo: int = 1, hi: int = 200) -> WeightedGraph:
    """Sparse G(n, p) noise with one planted clique on random vertices."""
    r = Xoshiro256(seed)
    p = min(1.0, avg_degree / max(n - 1, 1))
    g = gnp(n, p, r.next_u64(), lo, hi)
    members = set()
    while len(members) < min(clique_size, n):
        members.add(r.randint(0, n - 1))
    ms = sorted(members)
    for i, u in enumerate(ms):
        for v in ms[i + 1:]:
            if v not in g.adj[u]:
                g.add_edge(u, v)
    return g


def corpus(size: int, seed: int, n_range=(5, 30)) -> list:
    """``size`` random G(n, p) graphs with p cycling through 0.1..0.9."""
    r = Xoshiro256(seed)
    out = []
    for i in range(size):
        n = r.randint(*n_range)
        p = (i % 9 + 1) / 10
        out.append(gnp(n, p, r.next_u64()))
    return out
