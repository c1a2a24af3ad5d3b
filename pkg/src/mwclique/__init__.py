"""Maximum weight clique: exact reductions, branch and bound, reduce-and-peel."""
from .bnb import solve_exact
from .bounds import coloring_upper_bound, greedy_coloring, initial_clique, local_search_improve
from .graph import Clique, WeightedGraph, compact, degeneracy_ordering, validate_clique
from .instances import assign_weights, load_instance, parse_instance, write_instance
from .oracle import brute_force_opt
from .peel import mwc_peel
from .reductions import ReductionTrace, reconstruct
from .scheduler import SchedulerConfig, reduce
from .solvers import heuristic, mwc_redu

__version__ = "0.1.0"

__all__ = [
    "Clique",
    "ReductionTrace",
    "SchedulerConfig",
    "WeightedGraph",
    "assign_weights",
    "brute_force_opt",
    "coloring_upper_bound",
    "compact",
    "degeneracy_ordering",
    "greedy_coloring",
    "heuristic",
    "initial_clique",
    "load_instance",
    "local_search_improve",
    "mwc_peel",
    "mwc_redu",
    "parse_instance",
    "reconstruct",
    "reduce",
    "solve_exact",
    "validate_clique",
    "write_instance",
]
