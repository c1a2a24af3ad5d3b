#!/usr/bin/env python3
"""Compare exact, heuristic and reduce results against exhaustive search on random graphs."""
import argparse
import statistics
import sys
import time

from mwclique.clock import WorkClock
from mwclique.generators import corpus
from mwclique.graph import Clique, validate_clique
from mwclique.oracle import brute_force_opt
from mwclique.solvers import heuristic, mwc_redu


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=30)
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    bad = 0
    ratios = []
    for i, g in enumerate(corpus(args.size, args.seed, (5, args.max_n))):
        opt = brute_force_opt(g).weight
        ex = mwc_redu(g, "all", None, i, WorkClock())
        he = heuristic(g, "all", None, i, WorkClock())
        for rep in (ex, he):
            c = Clique.of(g, rep.clique)
            if not validate_clique(g, c) or c.weight != rep.w_best:
                print(f"graph {i}: invalid clique from {rep.termination}", file=sys.stderr)
                bad += 1
        if ex.w_best != opt or not ex.proven:
            print(f"graph {i}: exact {ex.w_best} (proven={ex.proven}) vs oracle {opt}", file=sys.stderr)
            bad += 1
        if he.w_best > opt:
            bad += 1
        ratios.append(he.w_best / opt if opt else 1.0)
    print(f"{args.size} graphs, {bad} problems, heuristic mean ratio {statistics.fmean(ratios):.4f}, "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
