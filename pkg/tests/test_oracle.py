import itertools

import pytest
from hypothesis import given

from mwclique.graph import GraphError, WeightedGraph
from mwclique.oracle import MAX_ORACLE_N, brute_force_opt, max_clique_through

from conftest import G, graphs, ids


def test_examples(cycle4):
    assert brute_force_opt(G(3, [(1, 2), (1, 3), (2, 3)], [1, 2, 3])).weight == 6
    assert brute_force_opt(G(3, [], [5, 1, 2])).weight == 5
    c = brute_force_opt(cycle4)
    assert c.weight == 7 and c.members == frozenset(ids(3, 4))


def test_guard():
    with pytest.raises(GraphError):
        brute_force_opt(WeightedGraph([1] * (MAX_ORACLE_N + 1)))


def test_empty():
    assert brute_force_opt(WeightedGraph([])).weight == 0


def _subsets_opt(g, within=None):
    vs = g.vertices() if within is None else sorted(within)
    best = (0, ())
    for r in range(1, len(vs) + 1):
        for s in itertools.combinations(vs, r):
            if all(g.is_adjacent(a, b) for a, b in itertools.combinations(s, 2)):
                w = sum(g.weight[v] for v in s)
                if w > best[0] or (w == best[0] and s < best[1]):
                    best = (w, s)
    return best


@given(graphs(max_n=10, max_weight=5))
def test_matches_subset_enumeration(g):
    w, s = _subsets_opt(g)
    c = brute_force_opt(g)
    assert c.weight == w
    assert tuple(sorted(c.members)) == s


@given(graphs(max_n=10))
def test_through_vertex(g):
    for v in g.vertices():
        best = 0
        vs = g.vertices()
        for r in range(len(vs)):
            for s in itertools.combinations([u for u in vs if u in g.adj[v]], r):
                if all(g.is_adjacent(a, b) for a, b in itertools.combinations(s, 2)):
                    best = max(best, g.weight[v] + sum(g.weight[u] for u in s))
            if r > 4:
                break
        if len(g.adj[v]) <= 5:
            assert max_clique_through(g, v) == best
