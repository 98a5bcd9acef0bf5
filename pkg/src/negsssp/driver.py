"""The full solver: split, reduce betweenness, shortcut, unfreeze, repeat.

Each round shrinks the number of frozen hops needed by shortest paths from ``h``
to ``h - floor(h/3)``; once that bound is at most 2 (or the instance is small
enough) a hop-limited hybrid finishes the job. The betweenness oracle is this
solver again, on a graph with fewer negative vertices.
"""
from __future__ import annotations

import math
import random
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

from .betweenness import BetweennessConfig, reduce_betweenness, sample_negative_vertices, sample_size
from .bidi import bidi_dijkstra
from .graph import (
    INF,
    FrozenGraph,
    Graph,
    SsspOutcome,
    apply_potential,
    cycle_vertices,
    freeze,
    is_closed_walk,
    simple_negative_cycle,
    unfreeze,
)
from .hops import finish, seed_labels, solve_naive
from .shortcut import shortcut_step
from .split import split_negative_vertices


class SolverError(RuntimeError):
    """Internal failure; ``trace`` holds everything recorded up to that point."""

    def __init__(self, msg, trace=None):
        super().__init__(msg)
        self.trace = trace


@dataclass
class SolverConfig:
    C: float = 4.0
    sample_multiplier: int = 4
    base_threshold: float | None = None
    max_iterations: int = 200
    rng_seed: int = 0
    mode: str = "rational"
    prune_dominated: bool = True

    def __post_init__(self):
        if self.C < 1:
            raise ValueError("C must be >= 1")

    @classmethod
    def desk(cls, **kw) -> "SolverConfig":
        """Small-instance preset that actually runs the shortcut loop and recursion.

        With the default ``C`` the base case ``k <= 4 C^3 ln^3 n`` swallows every
        graph that fits on a desk, so this lowers the base threshold to 2 and
        samples ``ceil(ln n)`` vertices per betweenness reduction.
        """
        kw.setdefault("base_threshold", 2)
        kw.setdefault("sample_multiplier", 1)
        return cls(**kw)

    def scale(self, n: int) -> float:
        return 4 * self.C ** 3 * math.log(max(n, 2)) ** 3

    def threshold(self, n: int) -> float:
        return self.scale(n) if self.base_threshold is None else self.base_threshold

    def b_for(self, k: int, n: int) -> float:
        return max(1.0, k / self.scale(n))


@dataclass
class IterationRecord:
    depth: int
    iteration: int
    k: int
    b: float
    sample_size: int
    recursed: bool
    h_before: int
    h_after: int
    n_before: int
    n_after: int
    m_after: int
    k_after: int
    steiner: int
    edges_added: list
    sum_sq: int
    sum_lin: int
    pruned: int
    bidi_edges_examined: int
    bidi_heap_ops: int


@dataclass
class RunTrace:
    iterations: list = field(default_factory=list)
    recursion: list = field(default_factory=list)
    max_depth: int = 0
    final: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def top_iterations(self) -> list:
        return [it for it in self.iterations if it.depth == 0]

    def as_dict(self, timings: bool = False) -> dict:
        d = {
            "iterations": [asdict(it) for it in self.iterations],
            "recursion": list(self.recursion),
            "max_depth": self.max_depth,
            "final": dict(self.final),
        }
        if timings:
            d["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return d


@dataclass
class _Prepared:
    fg: FrozenGraph
    lifts: list
    hops: int
    n0: int
    graph: Graph
    cycle_edges: list | None = None


def lift_walk(walk, lifts) -> list[int]:
    for lift in reversed(lifts):
        walk = [x for e in walk for x in lift[e]]
    return walk


def float_slack(g: Graph):
    if g.mode != "float":
        return 0
    return 2.0 ** -32 * float(g.max_abs_weight())


class _Solver:
    def __init__(self, cfg: SolverConfig):
        self.cfg = cfg
        self.trace = RunTrace()
        self.rng = random.Random(cfg.rng_seed)

    @contextmanager
    def timed(self, phase):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            tm = self.trace.timings
            tm[phase] = tm.get(phase, 0.0) + time.perf_counter() - t0

    def cycle_from_walk(self, graph: Graph, walk) -> list[int]:
        if not is_closed_walk(graph, walk):
            raise SolverError("lifted cycle is not a closed walk", self.trace)
        cyc = simple_negative_cycle(graph, walk)
        if cyc is None:
            raise SolverError("lifted closed walk is not negative", self.trace)
        return cyc

    def prepare(self, graph: Graph, depth: int) -> _Prepared:
        cfg = self.cfg
        self.trace.max_depth = max(self.trace.max_depth, depth)
        tol = float_slack(graph)
        n0 = graph.n
        fg = freeze(graph)
        lifts: list = []
        k = len(fg.negative_vertices)
        h = k
        thr = cfg.threshold(n0)
        it = 0
        while h > 2 and k > thr:
            if it >= cfg.max_iterations:
                raise SolverError("iteration guard exceeded", self.trace)
            it += 1
            n_before = fg.n
            with self.timed("split"):
                fg, _, lift = split_negative_vertices(fg)
                lifts.append(lift)
            b = cfg.b_for(k, n0)
            bc = BetweennessConfig(b, cfg.sample_multiplier, self.rng.getrandbits(63))
            sample = sample_negative_vertices(fg, bc)
            size = sample_size(k, fg.n, b, cfg.sample_multiplier)
            recursed = size < k
            if recursed:
                def oracle(hg, _k=k):
                    return self.solve_super(hg.graph, depth + 1, _k)
            else:
                oracle = solve_naive
            with self.timed("betweenness"):
                red = reduce_betweenness(fg, bc, oracle, sample=sample)
            if red.has_cycle:
                walk = lift_walk(red.cycle_edges, lifts)
                return _Prepared(fg, lifts, 0, n0, graph, self.cycle_from_walk(graph, walk))
            fg = apply_potential(fg, red.phi, tol)
            with self.timed("bidi"):
                bidi = {r: bidi_dijkstra(fg, r) for r in sorted(fg.negative_vertices)}
            with self.timed("shortcut"):
                fg, report, lift = shortcut_step(fg, bidi, tol, prune=cfg.prune_dominated)
                lifts.append(lift)
            h_new = h - h // 3
            fg = unfreeze(fg)
            k_new = len(fg.negative_vertices)
            self.trace.iterations.append(IterationRecord(
                depth=depth, iteration=it, k=k, b=b, sample_size=size, recursed=recursed,
                h_before=h, h_after=h_new, n_before=n_before, n_after=fg.n,
                m_after=fg.graph.m, k_after=k_new, steiner=report.steiner_count,
                edges_added=list(report.edges_added), sum_sq=report.sum_sq,
                sum_lin=report.sum_lin, pruned=report.pruned,
                bidi_edges_examined=sum(x.edges_examined for x in bidi.values()),
                bidi_heap_ops=sum(x.heap_ops for x in bidi.values()),
            ))
            h, k = h_new, k_new
        return _Prepared(fg, lifts, min(h, k), n0, graph)

    def finish_from(self, prep: _Prepared, seeds: dict):
        """Distances on the input's vertices, or a cycle in the input's edge ids."""
        phi = prep.fg.cumulative_phi
        labels = {v: lab - phi[v] for v, lab in seeds.items()}
        with self.timed("finish"):
            fin = finish(prep.fg, labels, prep.hops)
        info = {"hops": prep.hops, "extra_rounds": fin.extra_rounds}
        if fin.cycle_edges is not None:
            walk = lift_walk(fin.cycle_edges, prep.lifts)
            return None, self.cycle_from_walk(prep.graph, walk), info
        dist = [fin.dist[v] + phi[v] if fin.dist[v] != INF else INF for v in range(prep.n0)]
        return dist, None, info

    def solve_super(self, graph: Graph, depth: int, parent_k: int) -> SsspOutcome:
        child_k = len({e.src for e in graph.edges if e.weight < 0})
        self.trace.recursion.append({"depth": depth, "parent_k": parent_k, "child_k": child_k})
        prep = self.prepare(graph, depth)
        if prep.cycle_edges is not None:
            return SsspOutcome.from_cycle(graph, prep.cycle_edges)
        dist, cyc, _ = self.finish_from(prep, seed_labels(graph.n, None))
        if cyc is not None:
            return SsspOutcome.from_cycle(graph, cyc)
        return SsspOutcome(dist=dist, phi=list(dist))

    def outcome(self, prep: _Prepared, source) -> SsspOutcome:
        g = prep.graph
        if prep.cycle_edges is not None:
            return SsspOutcome.from_cycle(g, prep.cycle_edges)
        dist, cyc, info = self.finish_from(prep, seed_labels(g.n, source))
        if cyc is not None:
            out = SsspOutcome(cycle=cycle_vertices(g, cyc), cycle_edges=cyc)
        else:
            phi = list(dist) if source is None else list(prep.fg.cumulative_phi[: prep.n0])
            out = SsspOutcome(dist=dist, phi=phi)
        out.extra.update(info)
        return out

    def record_final(self, prep: _Prepared):
        self.trace.final = {
            "n_input": prep.n0,
            "n_final": prep.fg.n,
            "m_final": prep.fg.graph.m,
            "k_final": len(prep.fg.negative_vertices),
            "hops": prep.hops,
            "iterations": len(self.trace.top_iterations()),
            "cycle_in_preprocessing": prep.cycle_edges is not None,
        }


def solve(g: Graph, source, cfg: SolverConfig | None = None):
    """Shortest paths from ``source`` (``None`` = virtual super-source).

    Returns ``(outcome, trace)``. ``outcome`` carries exact distances on the
    input's vertices and a valid potential, or a negative cycle of the input
    graph (possibly one not reachable from ``source``).
    """
    solver = _Solver(cfg or SolverConfig())
    prep = solver.prepare(g, 0)
    solver.record_final(prep)
    out = solver.outcome(prep, source)
    solver.trace.final.update({k: v for k, v in out.extra.items()})
    return out, solver.trace


def solve_multi_source(g: Graph, sources, cfg: SolverConfig | None = None):
    """Preprocess once, then one hop-limited finish per source."""
    sources = list(sources)
    solver = _Solver(cfg or SolverConfig())
    if not sources:
        return [], solver.trace
    prep = solver.prepare(g, 0)
    solver.record_final(prep)
    return [solver.outcome(prep, s) for s in sources], solver.trace
