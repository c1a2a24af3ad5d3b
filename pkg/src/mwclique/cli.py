"""Command line front end.

Exit codes: 0 success (a timeout that still yields a clique counts), 1 usage
error, 2 instance parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .clock import make_clock
from .graph import Clique, GraphError, validate_clique
from .instances import FORMATS, ParseError, assign_weights, load_instance, write_instance
from .oracle import MAX_ORACLE_N, brute_force_opt
from .report import _fmt, aggregate, to_csv, to_json
from .solvers import heuristic, mwc_redu, run_reduce

EXIT_OK, EXIT_USAGE, EXIT_PARSE = 0, 1, 2

log = logging.getLogger("mwclique")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, time_limit: Optional[float] = None, runs: bool = True):
    p.add_argument("--seed", type=int, default=0, help="seed for weights and local search (u64)")
    p.add_argument("--weights", choices=("unit", "uniform200"), default=None,
                   help="override vertex weights; default keeps file weights (unit if none)")
    p.add_argument("--input-format", choices=FORMATS, default=None, help="default: from file extension")
    p.add_argument("--rules", choices=("old", "all"), default="all")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--clock", choices=("wall", "work"), default="wall",
                   help="'work' counts operations instead of seconds, for reproducible reports")
    if time_limit is not None:
        p.add_argument("--time-limit", type=float, default=time_limit)
    if runs:
        p.add_argument("--runs", type=int, default=5)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mwclique", description="Maximum weight clique: reductions, exact and heuristic solvers")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", help="reduce an instance and print kernel statistics")
    p.add_argument("instance")
    p.add_argument("--kernel-out", help="write the kernel graph here (format from extension)")
    _common(p, runs=False)

    p = sub.add_parser("exact", help="reduce, then branch and bound")
    p.add_argument("instance")
    p.add_argument("--no-maxsat", action="store_true", help="coloring bound only")
    _common(p, time_limit=3600.0)

    p = sub.add_parser("heuristic", help="reduce-and-peel heuristic")
    p.add_argument("instance")
    _common(p, time_limit=1000.0)

    p = sub.add_parser("oracle", help=f"exhaustive search (n <= {MAX_ORACLE_N})")
    p.add_argument("instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", choices=("unit", "uniform200"), default=None)
    p.add_argument("--input-format", choices=FORMATS, default=None)

    p = sub.add_parser("bench", help="solve every instance of a directory and tabulate")
    p.add_argument("directory")
    p.add_argument("--solver", choices=("exact", "heuristic"), default="exact")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes over instances")
    p.add_argument("--no-maxsat", action="store_true")
    _common(p, time_limit=None)
    p.set_defaults(format="csv")
    p.add_argument("--time-limit", type=float, default=None, help="per run; default 3600 exact, 1000 heuristic")
    return parser


def _load(args, path: str):
    inst = load_instance(path, args.input_format)
    if args.weights == "uniform200":
        assign_weights(inst.graph, args.seed)
        inst.weight_seed = args.seed
    elif args.weights == "unit":
        for v in inst.graph.vertices():
            inst.graph.set_weight(v, 1)
    return inst


def _check(g, report) -> None:
    c = Clique.of(g, report.clique)
    if c.weight != report.w_best or not validate_clique(g, c):
        raise RuntimeError(f"reported clique for {report.instance} does not validate")


def _solve(args, path: str) -> dict:
    inst = _load(args, path)
    reports = []
    runs = getattr(args, "runs", 1)
    if runs < 1:
        raise UsageError("--runs must be >= 1")
    solver = args.solver if args.command == "bench" else args.command
    for r in range(runs):
        seed = args.seed + r
        clock = make_clock(args.clock)
        if solver == "exact":
            limit = args.time_limit if args.time_limit is not None else 3600.0
            rep = mwc_redu(inst.graph, args.rules, limit, seed, clock, maxsat=not args.no_maxsat, instance=inst.name)
        else:
            limit = args.time_limit if args.time_limit is not None else 1000.0
            rep = heuristic(inst.graph, args.rules, limit, seed, clock, instance=inst.name)
        _check(inst.graph, rep)
        reports.append(rep)
    row = aggregate(inst.name, reports)
    row["seed"] = args.seed
    return row


def _emit(args, rows, footer: bool):
    text = to_csv(rows, footer) if args.format == "csv" else to_json(rows, footer)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_reduce(args) -> int:
    inst = _load(args, args.instance)
    reducer, res = run_reduce(inst.graph, args.rules, args.seed, args.clock)
    best = res.best
    if not validate_clique(inst.graph, best):
        raise RuntimeError("incumbent clique does not validate")
    doc = {
        "instance": inst.name,
        "rules": args.rules,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "kernel_n": res.stats["kernel_n"],
        "kernel_m": res.stats["kernel_m"],
        "w_best": best.weight,
        "clique": [v + 1 for v in best.sorted()],
        "t_reduce": reducer.clock.now(),
        "trace_length": res.stats["trace_length"],
        "per_rule": res.stats["rules"],
    }
    if args.kernel_out:
        write_instance(res.kernel, args.kernel_out, comment=f"kernel of {inst.name} ({args.rules} rules)")
    if args.format == "csv":
        cols = ("instance", "rules", "n", "m", "kernel_n", "kernel_m", "w_best", "t_reduce")
        sys.stdout.write(",".join(cols) + "\n" + ",".join(_fmt(doc[c]) for c in cols) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_solve(args) -> int:
    row = _solve(args, args.instance)
    _emit(args, [row], footer=False)
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _load(args, args.instance)
    if inst.graph.n > MAX_ORACLE_N:
        raise UsageError(f"oracle limited to {MAX_ORACLE_N} vertices, instance has {inst.graph.n}")
    c = brute_force_opt(inst.graph)
    sys.stdout.write(json.dumps({"instance": inst.name, "w_best": c.weight, "clique": [v + 1 for v in c.sorted()]}) + "\n")
    return EXIT_OK


def _bench_one(task):
    args, path = task
    return _solve(args, path)


def cmd_bench(args) -> int:
    if not os.path.isdir(args.directory):
        raise UsageError(f"{args.directory} is not a directory")
    paths = sorted(
        os.path.join(args.directory, f)
        for f in os.listdir(args.directory)
        if os.path.isfile(os.path.join(args.directory, f)) and not f.startswith(".")
    )
    if not paths:
        raise UsageError(f"no instances in {args.directory}")
    tasks = [(args, p) for p in paths]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, tasks))
    else:
        rows = [_bench_one(t) for t in tasks]
    _emit(args, rows, footer=True)
    return EXIT_OK


COMMANDS = {"reduce": cmd_reduce, "exact": cmd_solve, "heuristic": cmd_solve, "oracle": cmd_oracle, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help exits 0, usage errors exit 1
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, GraphError, FileNotFoundError, IsADirectoryError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
