import pytest
from hypothesis import given

from mwclique.bounds import LocalSearchConfig, initial_clique
from mwclique.clock import WorkClock
from mwclique.graph import Clique, WeightedGraph, validate_clique
from mwclique.oracle import brute_force_opt
from mwclique.reductions import reconstruct
from mwclique.scheduler import ALL_RULES, OLD_RULES, SchedulerConfig, reduce
from mwclique.solvers import run_reduce

from conftest import G, graphs, ids


def _config(rules=ALL_RULES, **kw):
    kw.setdefault("ls_interleave", False)
    return SchedulerConfig(rules=rules, **kw)


def test_k5_reduces_to_nothing():
    g = G(5, [(u, v) for u in range(1, 6) for v in range(u + 1, 6)], [1, 2, 3, 4, 5])
    res = reduce(g, None, _config(), WorkClock())
    assert res.kernel.n == 0
    assert res.best.weight == 15 and validate_clique(G(5, [(u, v) for u in range(1, 6) for v in range(u + 1, 6)], [1, 2, 3, 4, 5]), res.best)


def test_cycle_with_good_incumbent_empties(cycle4):
    best = Clique.of(cycle4, ids(3, 4))
    res = reduce(cycle4, best, _config(), WorkClock())
    assert res.kernel.n == 0
    assert res.best.weight == 7


def test_empty_graph():
    res = reduce(WeightedGraph([]), None, _config(), WorkClock())
    assert res.kernel.n == 0 and len(res.trace) == 0


def test_config_validation():
    with pytest.raises(ValueError):
        SchedulerConfig(rules=("nope",))
    with pytest.raises(ValueError):
        SchedulerConfig(rate_threshold=0)
    assert SchedulerConfig(rules="old").rules == OLD_RULES


def _reduce_opt(g, rules, **kw):
    clock = WorkClock()
    cfg = _config(rules, local_search=LocalSearchConfig(seed=3), **kw)
    res = reduce(g.copy(), initial_clique(g), cfg, clock)
    kernel_opt = brute_force_opt(res.kernel)
    lifted = reconstruct(res.trace, kernel_opt, res.kernel)
    return res, lifted


@pytest.mark.parametrize("rules", ["old", "all"])
@given(g=graphs(max_n=13))
def test_reduce_preserves_optimum(rules, g):
    opt = brute_force_opt(g).weight
    res, lifted = _reduce_opt(g, rules)
    assert validate_clique(g, res.best)
    assert validate_clique(g, lifted)
    assert max(res.best.weight, lifted.weight) == opt


@given(g=graphs(max_n=13))
def test_reduce_with_degree_limit_and_local_search(g):
    opt = brute_force_opt(g).weight
    res, lifted = _reduce_opt(g, "all", degree_limit_enabled=True, ls_interleave=True)
    assert max(res.best.weight, lifted.weight) == opt


@given(g=graphs(max_n=13))
def test_reduce_is_deterministic(g):
    a, _ = _reduce_opt(g, "all", ls_interleave=True)
    b, _ = _reduce_opt(g, "all", ls_interleave=True)
    assert a.kernel.state() == b.kernel.state()
    assert list(a.trace) == list(b.trace)
    assert a.best == b.best


def test_run_reduce_leaves_input_untouched(cycle4):
    before = cycle4.state()
    _, res = run_reduce(cycle4, "all", 0, "work")
    assert cycle4.state() == before
    assert res.kernel is not cycle4


def test_per_rule_stats_reported(cycle4):
    reducer, res = run_reduce(cycle4, "all", 0, "work")
    assert set(res.stats["rules"]) == set(ALL_RULES)
    removed = sum(s["vertices"] for s in res.stats["rules"].values())
    assert removed <= cycle4.n
