import random

from hypothesis import given, strategies as st

from mwclique.bounds import LocalSearchConfig, coloring_upper_bound, greedy_coloring, initial_clique, local_search_improve
from mwclique.graph import Clique, WeightedGraph, validate_clique
from mwclique.oracle import brute_force_opt

from conftest import G, graphs, ids


def test_initial_clique_triangle_with_pendant():
    g = G(4, [(1, 2), (1, 3), (2, 3), (1, 4)], [1, 2, 3, 5])
    c = initial_clique(g)
    assert c.members == frozenset(ids(1, 2, 3)) and c.weight == 6


def test_initial_clique_single_vertex():
    assert initial_clique(G(1, [], [7])).weight == 7


def test_initial_clique_cycle(cycle4):
    c = initial_clique(cycle4)
    assert c.members == frozenset(ids(3, 4)) and c.weight == 7


def test_initial_clique_empty():
    assert initial_clique(WeightedGraph([])) == Clique.empty()


def test_local_search_completes_triangle():
    g = G(3, [(1, 2), (1, 3), (2, 3)], [1, 2, 3])
    out = local_search_improve(g, Clique.of(g, {2}), LocalSearchConfig(), random.Random(0))
    assert out.members == frozenset(range(3))


def test_local_search_keeps_optimum(cycle4):
    start = Clique.of(cycle4, ids(3, 4))
    assert local_search_improve(cycle4, start, LocalSearchConfig(), random.Random(1)).weight == 7


def test_local_search_zero_budget(cycle4):
    start = Clique.of(cycle4, ids(1))
    assert local_search_improve(cycle4, start, LocalSearchConfig(step_budget=0)) is start


def test_greedy_coloring_examples(path3):
    tri = G(3, [(1, 2), (1, 3), (2, 3)])
    assert greedy_coloring(tri, tri.vertices()).k == 3
    p = G(3, [(1, 2), (2, 3)], [5, 4, 3])
    part = greedy_coloring(p, p.vertices())
    assert [sorted(c) for c in part.classes] == [sorted(ids(1, 3)), sorted(ids(2))]
    assert coloring_upper_bound(part) == 9 == brute_force_opt(p).weight
    ind = G(4)
    assert greedy_coloring(ind, ind.vertices()).k == 1


def test_coloring_bound_examples():
    tri = G(3, [(1, 2), (1, 3), (2, 3)], [3, 2, 1])
    assert coloring_upper_bound(greedy_coloring(tri, tri.vertices())) == 6
    ind = G(3, [], [7, 1, 1])
    assert coloring_upper_bound(greedy_coloring(ind, ind.vertices())) == 7


@given(graphs(max_n=14), st.integers(0, 2**16))
def test_coloring_bound_is_sound(g, seed):
    rng = random.Random(seed)
    cand = [v for v in g.vertices() if rng.random() < 0.7]
    part = greedy_coloring(g, cand)
    assert sorted(v for c in part.classes for v in c) == sorted(cand)
    for cls in part.classes:
        for i, u in enumerate(cls):
            for v in cls[i + 1:]:
                assert not g.is_adjacent(u, v)
    assert coloring_upper_bound(part) >= brute_force_opt(g, within=cand).weight


@given(graphs(min_n=1, max_n=14))
def test_initial_clique_is_lower_bound(g):
    c = initial_clique(g)
    assert validate_clique(g, c)
    assert c.weight <= brute_force_opt(g).weight


@given(graphs(min_n=1, max_n=14), st.integers(0, 2**16), st.integers(0, 300))
def test_local_search_monotone_and_valid(g, seed, budget):
    start = initial_clique(g)
    out = local_search_improve(g, start, LocalSearchConfig(step_budget=budget, bms_k=4), random.Random(seed))
    assert validate_clique(g, out)
    assert out.weight >= start.weight
    assert out.weight <= brute_force_opt(g).weight
