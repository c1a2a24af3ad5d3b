#!/usr/bin/env python3
"""Kernel sizes under the old rules (neighbourhood weight, largest neighbour) vs all rules.

Reduces seeded synthetic graphs from several families with both rule sets and
prints one CSV row per graph plus a per-family summary on stderr.

    python3 scripts/kernel_comparison.py --per-family 50 > kernels.csv
"""
import argparse
import csv
import sys
from collections import defaultdict

from mwclique.clock import WorkClock
from mwclique.generators import gnm, gnp, planted_clique
from mwclique.solvers import run_reduce

FAMILIES = {
    # name: builder(index, seed) -> graph
    "sparse4": lambda i, s: gnm(50 + 5 * i, 2 * (50 + 5 * i), s),
    "medium12": lambda i, s: gnm(50 + 3 * i, 6 * (50 + 3 * i), s),
    "dense05": lambda i, s: gnp(20 + 2 * i, 0.5, s),
    "planted": lambda i, s: planted_clique(50 + 5 * i, 8, 6, s),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-family", type=int, default=50)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--families", nargs="*", default=list(FAMILIES))
    args = ap.parse_args(argv)

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["family", "index", "n", "m", "old_n", "old_m", "all_n", "all_m", "w_old", "w_all"])
    summary = defaultdict(lambda: [0, 0, 0, 0, 0])
    for fam in args.families:
        build = FAMILIES[fam]
        for i in range(args.per_family):
            g = build(i, args.seed * 100003 + i)
            _, old = run_reduce(g, "old", args.seed, WorkClock())
            _, new = run_reduce(g, "all", args.seed, WorkClock())
            w.writerow([fam, i, g.n, g.m, old.kernel.n, old.kernel.m, new.kernel.n, new.kernel.m,
                        old.best.weight, new.best.weight])
            s = summary[fam]
            s[0] += 1
            s[1] += old.kernel.n
            s[2] += new.kernel.n
            s[3] += new.kernel.n == 0 and old.kernel.n > 0
            s[4] += new.kernel.n > old.kernel.n
    for fam, (k, o, a, empty, worse) in summary.items():
        print(f"{fam}: {k} graphs, mean kernel n old {o / k:.1f} all {a / k:.1f}, "
              f"empty only with all rules {empty}, all > old {worse}", file=sys.stderr)


if __name__ == "__main__":
    main()
