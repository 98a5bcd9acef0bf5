"""Negative-weight single-source shortest paths by iterated shortcutting."""
from .graph import (
    INF,
    Edge,
    FrozenGraph,
    Graph,
    GraphError,
    PotentialError,
    PreconditionError,
    SsspOutcome,
    apply_potential,
    build_graph,
    cycle_weight,
    freeze,
    unfreeze,
)
from .hops import bellman_ford, d_minus_from, d_zero_to, dijkstra, hop_sssp, solve_naive, two_hop_finish
from .split import split_negative_vertices
from .betweenness import BetweennessConfig, brute_force_betweenness, reduce_betweenness
from .bidi import BidiResult, bidi_dijkstra
from .shortcut import ShortcutReport, shortcut_step
from .driver import RunTrace, SolverConfig, SolverError, solve, solve_multi_source

__version__ = "0.1.0"
