import hypothesis
import pytest
from hypothesis import strategies as st

from mwclique.graph import WeightedGraph

hypothesis.settings.register_profile("default", max_examples=150, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")


def G(n, edges=(), weights=None):
    """Build a graph from 1-based labels, the way the examples are written."""
    return WeightedGraph.from_edges(n, [(u - 1, v - 1) for u, v in edges], weights)


def ids(*labels):
    return {x - 1 for x in labels}


@st.composite
def graphs(draw, min_n=0, max_n=12, max_weight=200):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.1, 0.3, 0.5, 0.7, 0.9]))
    weights = [draw(st.integers(1, max_weight)) for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.floats(0, 1)) < p:
                edges.append((u, v))
    return WeightedGraph.from_edges(n, edges, weights)


@pytest.fixture
def triangle():
    return G(3, [(1, 2), (1, 3), (2, 3)], [10, 20, 5])


@pytest.fixture
def path3():
    return G(3, [(1, 2), (2, 3)])


@pytest.fixture
def k4():
    return G(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def cycle4():
    return G(4, [(1, 2), (2, 3), (3, 4), (4, 1)], [1, 2, 3, 4])
