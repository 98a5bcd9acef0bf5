"""Betweenness reduction by sampling negative vertices, and a brute-force counter.

A vertex ``v`` is between ``(s, t)`` when ``d^0(s, v) + d^-(v, t) < 0``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .graph import Edge, FrozenGraph, Graph, PreconditionError, SsspOutcome
from .hops import d_minus_from, d_zero_to, solve_naive


@dataclass
class BetweennessConfig:
    b: float = 1.0
    sample_multiplier: int = 4
    rng_seed: int = 0

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("b must be >= 1")
        if self.sample_multiplier < 1:
            raise ValueError("sample multiplier must be positive")


def sample_size(k: int, n: int, b: float, sample_multiplier: int) -> int:
    """``min(k, ceil(c_s * b * ln n))``."""
    if k == 0:
        return 0
    return min(k, math.ceil(sample_multiplier * b * math.log(max(n, 2))))


def sample_negative_vertices(fg: FrozenGraph, cfg: BetweennessConfig) -> list[int]:
    neg = sorted(fg.negative_vertices)
    size = sample_size(len(neg), fg.n, cfg.b, cfg.sample_multiplier)
    return sorted(random.Random(cfg.rng_seed).sample(neg, size))


def sampled_subgraph(fg: FrozenGraph, sample) -> tuple[FrozenGraph, list[int]]:
    """Non-frozen edges of ``fg`` plus the frozen out-edges of ``sample``.

    Returns the subgraph (same vertex set) and the map from its edge ids to ``fg``'s.
    """
    keep = set(sample)
    g = fg.graph
    edges, back, frozen = [], [], set()
    for e in g.edges:
        is_frozen = e.id in fg.frozen
        if is_frozen and e.src not in keep:
            continue
        nid = len(edges)
        if is_frozen:
            frozen.add(nid)
        edges.append(Edge(e.src, e.dst, e.weight, nid))
        back.append(e.id)
    h = FrozenGraph(Graph(g.n, edges, g.mode), frozenset(frozen), (0,) * g.n)
    return h, back


def reduce_betweenness(
    fg: FrozenGraph,
    cfg: BetweennessConfig,
    oracle: Callable[[FrozenGraph], SsspOutcome] | None = None,
    sample=None,
) -> SsspOutcome:
    """Valid potential making every sampled negative vertex harmless, or a cycle.

    ``oracle(H)`` must solve SSSP on ``H`` from a super-source and return either
    distances (used verbatim as the potential) or a cycle in ``H``'s edge ids.
    The default oracle is the naive ``k``-hop solver. A returned cycle is
    translated back to ``fg``'s edge ids.
    """
    for u in fg.negative_vertices:
        if len(fg.frozen_out(u)) != 1:
            raise PreconditionError(f"negative vertex {u} has several frozen out-edges")
    if sample is None:
        sample = sample_negative_vertices(fg, cfg)
    h, back = sampled_subgraph(fg, sample)
    res = (oracle or solve_naive)(h)
    if res.has_cycle:
        ce = [back[i] for i in res.cycle_edges]
        out = SsspOutcome.from_cycle(fg.graph, ce)
    else:
        out = SsspOutcome(dist=list(res.dist), phi=list(res.dist))
    out.extra["sample"] = list(sample)
    return out


def betweenness_tables(fg: FrozenGraph):
    """``(d0_to, dminus)``: ``d0_to[v][s] = d^0(s, v)`` and ``dminus[v][t] = d^-(v, t)``.

    ``dminus`` only has entries for negative vertices, the only ones that can be
    between anything.
    """
    d0_to = [d_zero_to(fg, v) for v in range(fg.n)]
    dminus = {v: d_minus_from(fg, v) for v in sorted(fg.negative_vertices)}
    return d0_to, dminus


def brute_force_betweenness(fg: FrozenGraph) -> list[list[int]]:
    """``count[s][t]`` = number of ``v`` with ``d^0(s, v) + d^-(v, t) < 0``."""
    n = fg.n
    d0_to, dminus = betweenness_tables(fg)
    count = [[0] * n for _ in range(n)]
    for v, dm in dminus.items():
        col = d0_to[v]
        neg_t = [t for t in range(n) if dm[t] < 0]
        if not neg_t:
            continue
        for s in range(n):
            a = col[s]
            if a == math.inf:
                continue
            row = count[s]
            for t in neg_t:
                if a + dm[t] < 0:
                    row[t] += 1
    return count


def between_sets(fg: FrozenGraph) -> dict:
    """``{(s, t): set of v between them}`` for pairs with nonzero betweenness."""
    n = fg.n
    d0_to, dminus = betweenness_tables(fg)
    out: dict = {}
    for v, dm in dminus.items():
        col = d0_to[v]
        for s in range(n):
            if col[s] == math.inf:
                continue
            for t in range(n):
                if dm[t] != math.inf and col[s] + dm[t] < 0:
                    out.setdefault((s, t), set()).add(v)
    return out
