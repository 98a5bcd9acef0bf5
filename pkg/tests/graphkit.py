"""Shared fixtures and brute-force checkers for the test suite."""
from __future__ import annotations

import math
import random

from negsssp.betweenness import BetweennessConfig, reduce_betweenness
from negsssp.bidi import bidi_dijkstra
from negsssp.generators import gen_potential_shifted
from negsssp.graph import apply_potential, build_graph, freeze
from negsssp.hops import d_minus_from, d_zero_to, hop_sssp
from negsssp.shortcut import shortcut_step
from negsssp.split import split_negative_vertices

INF = math.inf


def random_graph(n, m, seed, lo=-6, hi=10, mode="rational"):
    """Arbitrary weights; may contain negative cycles."""
    rng = random.Random(seed)
    edges = [(rng.randrange(n), rng.randrange(n), rng.randint(lo, hi)) for _ in range(m)]
    return build_graph(n, edges, mode)


def hop_rows(fg, h, sources=None):
    src = range(fg.n) if sources is None else sources
    return {s: hop_sssp(fg, s, h).dist for s in src}


def bidi_violations(fg, res) -> list[str]:
    """The six balanced-set conditions for one ``BidiResult``."""
    r, delta = res.r, res.delta
    dm = d_minus_from(fg, r)
    d0 = d_zero_to(fg, r)
    bad = []
    if r in res.v_out or r in res.v_in:
        bad.append("source reported")
    for v in range(fg.n):
        if v == r:
            continue
        if v in res.v_out:
            if res.v_out[v] != dm[v]:
                bad.append(f"v_out[{v}] distance {res.v_out[v]} != {dm[v]}")
            if not dm[v] <= -delta:
                bad.append(f"cond1 v={v}")
        elif not dm[v] >= -delta:
            bad.append(f"cond2 v={v}")
        if v in res.v_in:
            if res.v_in[v] != d0[v]:
                bad.append(f"v_in[{v}] distance {res.v_in[v]} != {d0[v]}")
            if not d0[v] <= delta:
                bad.append(f"cond3 v={v}")
        elif not d0[v] >= delta:
            bad.append(f"cond4 v={v}")
    strict_out = all(d < -delta for d in res.v_out.values())
    strict_in = all(d < delta for d in res.v_in.values())
    if not (strict_out or strict_in):
        bad.append("cond5")
    if abs(len(res.v_out) - len(res.v_in)) > 1:
        bad.append("cond6")
    return bad


def post_split(seed, n=20, m=60, frac=0.2):
    g = gen_potential_shifted(n, m, frac, (0, 12), seed)
    fg, _, _ = split_negative_vertices(freeze(g))
    return g, fg


def post_betweenness(seed, n=20, m=60, frac=0.2, b=2.0, c_s=1):
    """Shifted graph after split and one betweenness reduction, plus the shortcut result."""
    g, fg = post_split(seed, n, m, frac)
    cfg = BetweennessConfig(b, c_s, seed)
    red = reduce_betweenness(fg, cfg)
    fg2 = apply_potential(fg, red.phi)
    bidi = {r: bidi_dijkstra(fg2, r) for r in sorted(fg2.negative_vertices)}
    fg3, report, lift = shortcut_step(fg2, bidi)
    return fg2, fg3, report, bidi


def closed_walk_weight(g, walk):
    return sum((g.edges[e].weight for e in walk), 0)


def simple_cycles(g, max_len=6, through=None):
    """Edge-id lists of simple cycles with at most ``max_len`` edges (small graphs only)."""
    out = []
    starts = range(g.n) if through is None else [g.edges[through].src]
    for s in starts:
        stack = [(s, [], {s})]
        while stack:
            v, path, seen = stack.pop()
            if len(path) >= max_len:
                continue
            for eid in g.out_adj[v]:
                w = g.edges[eid].dst
                if w == s:
                    cyc = path + [eid]
                    if through is None or through in cyc:
                        if through is not None or min(g.edges[e].src for e in cyc) == s:
                            out.append(cyc)
                elif w not in seen and (through is not None or w > s):
                    stack.append((w, path + [eid], seen | {w}))
    return out
