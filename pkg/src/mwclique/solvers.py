"""End-to-end solvers: reduce-then-branch (exact) and reduce-and-peel (heuristic)."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .bnb import solve_exact
from .bounds import LocalSearchConfig, initial_clique
from .clock import make_clock
from .graph import WeightedGraph
from .peel import PeelConfig, mwc_peel
from .reductions import Incumbent, reconstruct
from .scheduler import Reducer, SchedulerConfig, RULE_SETS


@dataclass
class SolveReport:
    instance: str
    n: int
    m: int
    w_best: int
    clique: list
    t_sol: float
    t_prv: Optional[float]
    proven: bool
    kernel_n: int
    kernel_m: int
    termination: str
    seed: int
    rules: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def density(self) -> float:
        return 2 * self.m / (self.n * (self.n - 1)) if self.n > 1 else 0.0

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "density": self.density,
            "kernel_n": self.kernel_n,
            "kernel_m": self.kernel_m,
            "w_best": self.w_best,
            "clique": [v + 1 for v in sorted(self.clique)],
            "t_sol": self.t_sol,
            "t_prv": self.t_prv,
            "proven": self.proven,
            "termination": self.termination,
            "seed": self.seed,
            "rules": self.rules,
            **self.extra,
        }


def _scheduler_config(rules, seed: int, degree_limit: bool = True, ls_interleave: bool = True) -> SchedulerConfig:
    return SchedulerConfig(
        rules=RULE_SETS[rules] if isinstance(rules, str) else tuple(rules),
        degree_limit_enabled=degree_limit,
        ls_interleave=ls_interleave,
        local_search=LocalSearchConfig(seed=seed),
    )


def run_reduce(g: WeightedGraph, rules="all", seed: int = 0, clock="wall", degree_limit: bool = True, ls_interleave: bool = True):
    """Reduce a copy of ``g``; returns ``(reducer, result)``."""
    clock = make_clock(clock) if isinstance(clock, str) else clock
    work = g.copy()
    incumbent = Incumbent(initial_clique(work), clock)
    reducer = Reducer(work, incumbent, _scheduler_config(rules, seed, degree_limit, ls_interleave), clock=clock)
    return reducer, reducer.run()


def mwc_redu(
    g: WeightedGraph,
    rules="all",
    time_limit: Optional[float] = 3600.0,
    seed: int = 0,
    clock="wall",
    maxsat: bool = True,
    instance: str = "",
) -> SolveReport:
    """Exact pipeline: reduce, branch and bound on the kernel, lift the answer."""
    clock = make_clock(clock) if isinstance(clock, str) else clock
    reducer, res = run_reduce(g, rules, seed, clock)
    kernel = res.kernel
    incumbent = reducer.incumbent
    remaining = None if time_limit is None else max(0.0, time_limit - clock.now())
    out = solve_exact(kernel, lower_bound=incumbent.weight, time_limit=remaining, clock=clock, maxsat=maxsat)
    if out.clique is not None:
        lifted = reconstruct(reducer.trace, out.clique)
        incumbent.offer(lifted)
    end = clock.now()
    return SolveReport(
        instance=instance,
        n=g.n,
        m=g.m,
        w_best=incumbent.weight,
        clique=sorted(incumbent.members),
        t_sol=incumbent.found_at,
        t_prv=end if out.proven else None,
        proven=out.proven,
        kernel_n=res.stats["kernel_n"],
        kernel_m=res.stats["kernel_m"],
        termination="optimal" if out.proven else "timeout",
        seed=seed,
        rules=res.stats["rules"],
        extra={"nodes": out.stats["nodes"], "filtered": out.stats["filtered"]},
    )


def heuristic(
    g: WeightedGraph,
    rules="all",
    time_limit: Optional[float] = 1000.0,
    seed: int = 0,
    clock="wall",
    instance: str = "",
    config: Optional[PeelConfig] = None,
) -> SolveReport:
    clock = make_clock(clock) if isinstance(clock, str) else clock
    config = config or PeelConfig()
    config = replace(config, scheduler=_scheduler_config(rules, seed, degree_limit=False))
    out = mwc_peel(g, config, time_limit=time_limit, clock=clock, seed=seed)
    s = out.stats
    return SolveReport(
        instance=instance,
        n=g.n,
        m=g.m,
        w_best=out.clique.weight,
        clique=sorted(out.clique.members),
        t_sol=s["found_at"],
        t_prv=None,
        proven=False,
        kernel_n=s["kernel_n"],
        kernel_m=s["kernel_m"],
        termination="heuristic-" + s["stop"],
        seed=seed,
        rules=s["reduce"]["rules"],
        extra={"rounds": s["rounds"], "peeled": s["peeled"], "residue_n": s["residue_n"]},
    )
