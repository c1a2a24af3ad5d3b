import csv
import io
import json
import math

import pytest

from mwclique import cli
from mwclique.graph import Clique, validate_clique
from mwclique.instances import load_instance

K3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\nn 1 1\nn 2 2\nn 3 3\n"
C4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nn 1 1\nn 2 2\nn 3 3\nn 4 4\n"


@pytest.fixture
def instances(tmp_path):
    d = tmp_path / "inst"
    d.mkdir()
    (d / "k3.clq").write_text(K3)
    (d / "c4.clq").write_text(C4)
    (d / "p5.txt").write_text("1 2\n2 3\n3 4\n4 5\n")
    return d


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exact_k3(capsys, instances):
    code, out, _ = run(capsys, "exact", instances / "k3.clq", "--runs", 2)
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["w_best"] == 6 and row["proven"] and row["t_prv"] is not None
    for r in row["runs"]:
        assert r["t_sol"] <= r["t_prv"]
        assert r["clique"] == [1, 2, 3]


@pytest.mark.parametrize("cmd", ["exact", "heuristic"])
@pytest.mark.parametrize("weights", [None, "uniform200", "unit"])
def test_reported_clique_validates(capsys, instances, cmd, weights):
    for name in ("k3.clq", "c4.clq", "p5.txt"):
        extra = ["--weights", weights] if weights else []
        code, out, _ = run(capsys, cmd, instances / name, "--seed", 9, "--clock", "work", *extra)
        assert code == 0
        row = json.loads(out)["rows"][0]
        g = load_instance(str(instances / name)).graph
        if weights == "uniform200":
            from mwclique.instances import assign_weights

            assign_weights(g, 9)
        elif weights == "unit":
            for v in g.vertices():
                g.set_weight(v, 1)
        for r in row["runs"]:
            c = Clique.of(g, [v - 1 for v in r["clique"]])
            assert validate_clique(g, c) and c.weight == r["w_best"]


def test_reduce_rules(capsys, instances, tmp_path):
    sizes = {}
    for rules in ("old", "all"):
        code, out, _ = run(capsys, "reduce", instances / "c4.clq", "--rules", rules, "--kernel-out", tmp_path / f"k_{rules}.clq")
        assert code == 0
        doc = json.loads(out)
        sizes[rules] = doc["kernel_n"]
        assert load_instance(str(tmp_path / f"k_{rules}.clq")).graph.n == doc["kernel_n"]
    assert sizes["all"] <= sizes["old"]


def test_reduce_csv(capsys, instances):
    code, out, _ = run(capsys, "reduce", instances / "k3.clq", "--format", "csv", "--clock", "work")
    assert code == 0
    (row,) = csv.DictReader(io.StringIO(out))
    assert row["w_best"] == "6" and row["kernel_n"] == "0"


def test_oracle(capsys, instances):
    code, out, _ = run(capsys, "oracle", instances / "c4.clq")
    assert code == 0
    assert json.loads(out) == {"instance": "c4.clq", "w_best": 7, "clique": [3, 4]}


def test_bench_csv_footer(capsys, instances, tmp_path):
    report = tmp_path / "r.csv"
    code, _, _ = run(capsys, "bench", instances, "--runs", 2, "--clock", "work", "--output", report)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(report.read_text())))
    assert [r["instance"] for r in rows] == ["c4.clq", "k3.clq", "p5.txt", "geomean"]
    body, foot = rows[:-1], rows[-1]
    for col in ("n", "m", "density", "kernel_n", "w_best", "t_sol", "t_prv"):
        want = math.exp(sum(math.log(float(r[col]) + 1) for r in body) / len(body)) - 1
        assert math.isclose(float(foot[col]), want, rel_tol=1e-9, abs_tol=1e-12)


def test_bench_json_and_jobs(capsys, instances):
    code, out, _ = run(capsys, "bench", instances, "--format", "json", "--runs", 1, "--jobs", 2, "--solver", "heuristic")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 3 and "geomean" in doc


def test_exit_codes(capsys, tmp_path, instances):
    bad = tmp_path / "bad.clq"
    bad.write_text("p edge 2 1\ne 1 1\n")
    code, _, err = run(capsys, "exact", bad)
    assert code == 2 and "bad.clq:2" in err
    assert run(capsys, "exact", tmp_path / "missing.clq")[0] == 1
    assert run(capsys, "exact")[0] == 1
    assert run(capsys, "nope")[0] == 1
    assert run(capsys, "exact", instances / "k3.clq", "--runs", 0)[0] == 1
    empty = tmp_path / "empty"
    empty.mkdir()
    assert run(capsys, "bench", empty)[0] == 1
    big = tmp_path / "big.txt"
    big.write_text("".join(f"{i} {i + 1}\n" for i in range(1, 40)))
    assert run(capsys, "oracle", big)[0] == 1


def test_timeout_is_success(capsys, tmp_path):
    import random

    rng = random.Random(3)
    n = 80
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.9]
    p = tmp_path / "dense.clq"
    p.write_text(f"p edge {n} {len(edges)}\n" + "".join(f"e {u} {v}\n" for u, v in edges))
    code, out, _ = run(capsys, "exact", p, "--time-limit", 0, "--runs", 1, "--weights", "uniform200")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["w_best"] > 0
