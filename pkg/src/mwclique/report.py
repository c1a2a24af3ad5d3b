"""Benchmark report rows, CSV/JSON output and the geometric-mean footer.

The footer uses the shifted geometric mean ``exp(mean(log(x + 1))) - 1`` so that
zero kernel sizes and zero times are admissible.
"""
from __future__ import annotations

import csv
import io
import json
import math
from statistics import fmean
from typing import Optional

CSV_COLUMNS = ("instance", "n", "m", "density", "kernel_n", "kernel_m", "w_best", "t_sol", "t_prv", "proven", "seed")
MEAN_COLUMNS = ("n", "m", "density", "kernel_n", "kernel_m", "w_best", "t_sol", "t_prv")
GEOMEAN_SHIFT = 1.0


def shifted_geomean(xs, shift: float = GEOMEAN_SHIFT) -> Optional[float]:
    xs = [x for x in xs if x is not None]
    if not xs:
        return None
    return math.exp(fmean(math.log(x + shift) for x in xs)) - shift


def aggregate(instance: str, reports: list) -> dict:
    """Average several runs of one instance into a single row."""
    t_prv = [r.t_prv for r in reports]
    return {
        "instance": instance,
        "n": reports[0].n,
        "m": reports[0].m,
        "density": reports[0].density,
        "kernel_n": fmean(r.kernel_n for r in reports),
        "kernel_m": fmean(r.kernel_m for r in reports),
        "w_best": fmean(r.w_best for r in reports),
        "t_sol": fmean(r.t_sol for r in reports),
        "t_prv": fmean(t_prv) if all(t is not None for t in t_prv) else None,
        "proven": all(r.proven for r in reports),
        "seed": reports[0].seed,
        "runs": [r.to_dict() for r in reports],
    }


def geomean_row(rows: list) -> dict:
    row = {"instance": "geomean"}
    for col in MEAN_COLUMNS:
        row[col] = shifted_geomean([r[col] for r in rows])
    row["proven"] = sum(1 for r in rows if r["proven"])
    row["seed"] = rows[0]["seed"] if rows else None
    return row


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if x.is_integer() and abs(x) < 1e15:
            return str(int(x))
        # shortest round-trip repr keeps the footer recomputable from the rows
        return repr(x)
    return str(x)


def to_csv(rows: list, footer: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    all_rows = list(rows) + ([geomean_row(rows)] if footer and rows else [])
    for r in all_rows:
        w.writerow([_fmt(r[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_json(rows: list, footer: bool = True) -> str:
    doc = {"rows": rows}
    if footer and rows:
        doc["geomean"] = geomean_row(rows)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
