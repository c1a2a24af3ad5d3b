import gzip
import math

import pytest
from hypothesis import given, strategies as st

from mwclique.graph import WeightedGraph
from mwclique.instances import (
    ParseError,
    assign_weights,
    detect_format,
    dumps_dimacs,
    dumps_edgelist,
    dumps_metis,
    load_instance,
    parse_text,
    write_instance,
)
from mwclique.rng import Xoshiro256, splitmix64

from conftest import graphs

K3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_dimacs_k3():
    g, weighted = parse_text(K3)
    assert not weighted
    assert (g.n, g.m) == (3, 3) and g.weight == [1, 1, 1]


def test_dimacs_weights():
    g, weighted = parse_text(K3 + "n 1 10\nn 2 20\nv 3 5\n")
    assert weighted and g.weight == [10, 20, 5]


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 2\ne 1 2\ne 2 1\n", 3),
        ("p edge 2 1\ne 1 3\n", 2),
        ("p edge 2 1\ne 1 2\nn 1 0\n", 3),
        ("p edge 2 1\ne 1 2\nn 1 -4\n", 3),
        ("p edges 2\n", 1),
        ("c hi\ne 1 2\n", 2),
        ("p edge 2 1\nx 1 2\n", 2),
        ("p edge 2 1\ne 1 b\n", 2),
    ],
)
def test_dimacs_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as e:
        parse_text(text, path="bad.clq")
    assert e.value.line == line
    assert f"bad.clq:{line}:" in str(e.value)


def test_dimacs_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_text("p edge 3 2\ne 1 2\n")
    with pytest.raises(ParseError):
        parse_text("c no header\n")


def test_metis():
    g, weighted = parse_text("3 2\n2\n1 3\n2\n", "metis")
    assert not weighted and g.edges() == [(0, 1), (1, 2)]
    g, weighted = parse_text("% c\n3 2 10\n4 2\n5 1 3\n6 2\n", "metis")
    assert weighted and g.weight == [4, 5, 6]


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n1\n1\n", 2),
        ("2 1\n2\n2\n", 3),
        ("2 1\n3\n1\n", 2),
        ("2 1 11\n2\n1\n", 1),
        ("2 1 10\n\n1 1\n", 2),
    ],
)
def test_metis_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse_text(text, "metis")
    assert e.value.line == line


def test_metis_asymmetric():
    with pytest.raises(ParseError):
        parse_text("3 1\n2\n\n\n", "metis")


def test_edgelist():
    g, _ = parse_text("# comment\n1 2\n2 4\n", "edgelist")
    assert (g.n, g.m) == (4, 2) and g.edges() == [(0, 1), (1, 3)]
    with pytest.raises(ParseError) as e:
        parse_text("1 2\n3 3\n", "edgelist")
    assert e.value.line == 2


def test_detect_format():
    assert detect_format("a/b.clq") == "dimacs"
    assert detect_format("x.graph.gz") == "metis"
    assert detect_format("x.edges") == "edgelist"


def _same(a: WeightedGraph, b: WeightedGraph):
    return a.weight == b.weight and a.edges() == b.edges()


@pytest.mark.parametrize("fmt", ["dimacs", "metis"])
@given(g=graphs(max_n=15))
def test_round_trip(fmt, g):
    text = dumps_dimacs(g) if fmt == "dimacs" else dumps_metis(g)
    h, weighted = parse_text(text, fmt)
    assert _same(g, h) and (weighted or g.n == 0)


@given(graphs(max_n=15))
def test_edgelist_round_trip_structure(g):
    h, _ = parse_text(dumps_edgelist(g), "edgelist")
    # vertices are implied, so trailing isolated vertices are lost
    assert h.edges() == g.edges()


def test_file_io(tmp_path):
    g, _ = parse_text(K3 + "n 1 10\nn 2 20\nn 3 5\n")
    for name in ("k3.clq", "k3.graph", "k3.txt"):
        write_instance(g, str(tmp_path / name), comment="test")
        inst = load_instance(str(tmp_path / name))
        assert inst.graph.edges() == g.edges() and inst.name == name
    p = tmp_path / "k3.clq.gz"
    with gzip.open(p, "wt") as f:
        f.write(dumps_dimacs(g))
    assert load_instance(str(p)).graph.weight == [10, 20, 5]


def test_splitmix_reference_values():
    sm = splitmix64(0)
    assert [next(sm) for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_xoshiro_reference_values():
    r = Xoshiro256(0)
    r.s = [1, 2, 3, 4]
    assert [r.next_u64() for _ in range(4)] == [11520, 0, 1509978240, 1215971899390074240]


def test_assign_weights_deterministic_and_in_range():
    a = assign_weights(WeightedGraph([1] * 500), 42).weight
    b = assign_weights(WeightedGraph([1] * 500), 42).weight
    c = assign_weights(WeightedGraph([1] * 500), 43).weight
    assert a == b and a != c
    assert all(1 <= w <= 200 for w in a + c)


def _chi2_critical(df, z=3.09):
    # Wilson-Hilferty approximation of the upper 0.001 quantile
    k = 2 / (9 * df)
    return df * (1 - k + z * math.sqrt(k)) ** 3


@pytest.mark.parametrize("seed", [1, 2024])
def test_weights_pass_chi_square(seed):
    draws = 100_000
    r = Xoshiro256(seed)
    counts = [0] * 200
    for _ in range(draws):
        counts[r.randint(1, 200) - 1] += 1
    expected = draws / 200
    chi2 = sum((c - expected) ** 2 / expected for c in counts)
    assert chi2 < _chi2_critical(199)


@given(st.integers(0, 2**64 - 1), st.integers(1, 1000), st.integers(0, 1000))
def test_randint_range(seed, lo, span):
    r = Xoshiro256(seed)
    assert all(lo <= r.randint(lo, lo + span) <= lo + span for _ in range(20))
    assert 0 <= r.random() < 1
