import csv
import io
import math

from hypothesis import given, strategies as st

from mwclique.report import CSV_COLUMNS, _fmt, shifted_geomean, to_csv


def test_geomean_examples():
    assert shifted_geomean([0, 0]) == 0
    assert math.isclose(shifted_geomean([1, 3]), math.sqrt(2 * 4) - 1)
    assert shifted_geomean([None]) is None


def test_fmt():
    assert _fmt(True) == "true" and _fmt(None) == "" and _fmt(3.0) == "3"
    assert float(_fmt(0.1 + 0.2)) == 0.1 + 0.2


def _row(i, x):
    return {"instance": f"g{i}", "n": 10 + i, "m": i, "density": x, "kernel_n": i, "kernel_m": 0,
            "w_best": 100 + i, "t_sol": x, "t_prv": x * 2, "proven": True, "seed": 0}


@given(st.lists(st.floats(0, 1e4, allow_nan=False), min_size=1, max_size=20))
def test_csv_footer_recomputes(xs):
    rows = [_row(i, x) for i, x in enumerate(xs)]
    parsed = list(csv.DictReader(io.StringIO(to_csv(rows))))
    assert list(parsed[0]) == list(CSV_COLUMNS)
    body, foot = parsed[:-1], parsed[-1]
    assert foot["instance"] == "geomean"
    for col in ("t_sol", "t_prv", "w_best", "n"):
        want = math.exp(sum(math.log(float(r[col]) + 1) for r in body) / len(body)) - 1
        assert math.isclose(float(foot[col]), want, rel_tol=1e-9, abs_tol=1e-12)
