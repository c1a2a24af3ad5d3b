#!/usr/bin/env python3
"""Write a seeded synthetic benchmark directory and run ``mwclique bench`` on it.

    python3 scripts/bench_synthetic.py out/ --solver exact --clock work
"""
import argparse
import os
import sys

from mwclique import cli
from mwclique.generators import gnm, gnp, planted_clique
from mwclique.instances import write_instance


def generate(directory: str, seed: int, scale: int):
    os.makedirs(directory, exist_ok=True)
    specs = []
    for i in range(3):
        n = 1000 * scale * (i + 1)
        specs.append((f"gnm_n{n}_d10.clq", gnm(n, 5 * n, seed + i)))
        specs.append((f"planted_n{n}.clq", planted_clique(n, 6, 12, seed + 10 + i)))
    for p in (0.3, 0.6):
        specs.append((f"gnp_n60_p{int(p * 10)}.clq", gnp(60, p, seed + int(100 * p))))
    for name, g in specs:
        write_instance(g, os.path.join(directory, name), comment=f"seed {seed}")
    return [name for name, _ in specs]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("directory")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--scale", type=int, default=1, help="multiplies the vertex counts")
    ap.add_argument("--solver", choices=("exact", "heuristic"), default="exact")
    ap.add_argument("--clock", choices=("wall", "work"), default="wall")
    ap.add_argument("--runs", type=int, default=1)
    ap.add_argument("--time-limit", type=float, default=60.0)
    ap.add_argument("--output")
    args = ap.parse_args(argv)

    inst_dir = os.path.join(args.directory, "instances")
    names = generate(inst_dir, args.seed, args.scale)
    print(f"wrote {len(names)} instances to {inst_dir}", file=sys.stderr)
    bench = ["bench", inst_dir, "--solver", args.solver, "--clock", args.clock, "--runs", str(args.runs),
             "--seed", str(args.seed), "--time-limit", str(args.time_limit)]
    if args.output:
        bench += ["--output", args.output]
    return cli.main(bench)


if __name__ == "__main__":
    sys.exit(main())
