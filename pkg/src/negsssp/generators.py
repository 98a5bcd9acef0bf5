"""Seeded test graphs: potential-shifted (no negative cycle), planted cycles, gadgets."""
from __future__ import annotations

import random

from .graph import Graph, build_graph


def _pairs(rng: random.Random, n: int, m: int) -> list[tuple[int, int]]:
    total = n * (n - 1)
    if m > total:
        raise ValueError(f"at most {total} distinct non-loop edges on {n} vertices")
    idx = rng.sample(range(total), m)
    out = []
    for i in idx:
        u, j = divmod(i, n - 1)
        out.append((u, j + (j >= u)))
    return out


def gen_potential_shifted(
    n: int,
    m: int,
    neg_fraction: float = 0.1,
    weight_range: tuple[int, int] = (0, 10),
    seed: int = 0,
    mode: str = "rational",
) -> Graph:
    """``w = w' + psi(src) - psi(dst)`` with ``w' >= 0``, so every cycle weighs ``sum w' >= 0``.

    ``psi(v) = floor(R * u_v)`` with ``u_v`` uniform in ``[0, 1)``; ``R`` is the
    largest integer (found by binary search) whose negative-edge count stays at
    most ``round(neg_fraction * m)``.
    """
    if m < 0 or not 0 <= neg_fraction <= 1:
        raise ValueError("need m >= 0 and 0 <= neg_fraction <= 1")
    lo_w, hi_w = weight_range
    if lo_w < 0 or hi_w < lo_w:
        raise ValueError("weight_range must be a non-negative interval")
    rng = random.Random(seed)
    pairs = _pairs(rng, n, m) if n > 1 else []
    base = [rng.randint(lo_w, hi_w) for _ in pairs]
    u = [rng.random() for _ in range(n)]
    target = round(neg_fraction * m)

    def weights(R):
        psi = [int(R * x) for x in u]
        return [w + psi[a] - psi[b] for (a, b), w in zip(pairs, base)]

    def negs(R):
        return sum(1 for w in weights(R) if w < 0)

    R = 0
    if target > 0:
        hi = 1
        while negs(hi) <= target and hi < 1 << 30:
            hi *= 2
        lo = hi // 2 if negs(hi) > target else hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if negs(mid) <= target:
                lo = mid
            else:
                hi = mid
        R = lo
    ws = weights(R)
    return build_graph(n, [(a, b, w) for (a, b), w in zip(pairs, ws)], mode)


def gen_planted_cycle(
    n: int,
    m: int,
    cycle_len: int,
    cycle_weight: int = -1,
    seed: int = 0,
    neg_fraction: float = 0.1,
    mode: str = "rational",
) -> tuple[Graph, list[int]]:
    """Potential-shifted base plus a cycle through vertex 0 of total ``cycle_weight``.

    Returns the graph and the planted cycle's edge ids. Passing through vertex 0
    keeps the cycle reachable from the usual source.
    """
    if cycle_len < 2 or cycle_len > n:
        raise ValueError("need 2 <= cycle_len <= n")
    base = gen_potential_shifted(n, m, neg_fraction, seed=seed, mode=mode)
    rng = random.Random(seed ^ 0x5EED)
    verts = [0] + rng.sample(range(1, n), cycle_len - 1)
    ws = [rng.randint(-5, 5) for _ in range(cycle_len - 1)]
    ws.append(cycle_weight - sum(ws))
    edges = [(e.src, e.dst, e.weight) for e in base.edges]
    first = len(edges)
    for i, w in enumerate(ws):
        edges.append((verts[i], verts[(i + 1) % cycle_len], w))
    return build_graph(n, edges, mode), list(range(first, first + cycle_len))


def gen_lemma6_gadget(case: int) -> tuple[Graph, dict]:
    """Fixtures with frozen edges ``(u, u')``, ``(r, r')``, ``(v, v')`` on a path.

    Vertices: ``u=0, u'=1, r=2, r'=3, v=4, v'=5`` (case 2 adds feeders 6, 7 into
    ``r``). ``expect`` names the shortcut that replaces the segment and the
    segment's weight:

    1. ``d^0(u', r) < delta``: edge ``(u, r')`` from step 5.
    2. ``d^-(r, v) < -delta``: edge ``(r, v')`` from step 4.
    3. neither: the two-hop path ``u' -> rt -> r'`` through the Steiner vertex.
    """
    u, up, r, rp, v, vp = range(6)
    if case == 1:
        edges = [(u, up, -1), (up, r, 1), (r, rp, -5), (rp, v, 1), (v, vp, -1)]
        expect = {"delta": 4, "edge": (u, rp), "segment": [u, up, r, rp], "segment_weight": -5}
        n = 6
    elif case == 2:
        edges = [(u, up, -1), (up, r, 20), (r, rp, -10), (rp, v, 1), (v, vp, -1),
                 (6, r, 0), (7, r, 0)]
        expect = {"delta": 0, "edge": (r, vp), "segment": [r, rp, v, vp], "segment_weight": -10}
        n = 8
    elif case == 3:
        edges = [(u, up, -1), (up, r, 5), (r, rp, -5), (rp, v, 1), (v, vp, -1)]
        expect = {"delta": 5, "path": (up, "steiner", rp), "segment": [up, r, rp],
                  "segment_weight": 0}
        n = 6
    else:
        raise ValueError("case must be 1, 2 or 3")
    expect.update(case=case, r=r)
    return build_graph(n, edges), expect
