"""Betweenness reduction through one SSSP call on a layered graph, and the
two-copy hop reducer.

Layer ``0`` is ``G0``, layers ``1..h`` are the forward copies and ``h+1..2h`` the
backward copies (``h+i`` is backward copy ``i``). Vertex ``v`` of layer ``L``
has id ``L * n + v``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .graph import Edge, FrozenGraph, Graph, SsspOutcome, apply_potential, simple_negative_cycle
from .hops import hop_sssp


@dataclass
class LayeredInstance:
    graph: Graph
    n_base: int
    h: int
    M: object
    sample: list
    lift: list  # layered edge id -> tuple of base edge ids (empty for stay and jump edges)
    kinds: list  # "copy" | "lifted" | "stay" | "jump"

    @property
    def layers(self) -> int:
        return 2 * self.h + 1

    def vid(self, tag: str, v: int, i: int = 0) -> int:
        if tag == "0":
            layer = 0
        elif tag == "fwd":
            layer = i
        elif tag == "bwd":
            layer = self.h + i
        else:
            raise ValueError(f"unknown layer tag {tag!r}")
        if tag != "0" and not 1 <= i <= self.h:
            raise ValueError("copy index out of range")
        return layer * self.n_base + v

    def locate(self, x: int) -> tuple[str, int, int]:
        """Inverse of :meth:`vid`: ``(tag, copy index, base vertex)``."""
        layer, v = divmod(x, self.n_base)
        if layer == 0:
            return "0", 0, v
        if layer <= self.h:
            return "fwd", layer, v
        return "bwd", layer - self.h, v


def layered_sample(n: int, b: float, sample_multiplier: int = 4, seed: int = 0) -> list[int]:
    size = min(n, math.ceil(sample_multiplier * b * math.log(max(n, 2))))
    return sorted(random.Random(seed).sample(range(n), size))


def build_layered(fg: FrozenGraph, h: int, b: float = 1.0, seed: int = 0,
                  sample=None, sample_multiplier: int = 4) -> LayeredInstance:
    """Layered instance whose only negative edges are the ``|S|`` jump edges.

    Frozen edges of ``fg`` play the part of the negative edges: they link copy
    ``i`` to copy ``i+1`` with weight ``w + M``. Each vertex also gets a "stay"
    edge of weight ``M`` between consecutive copies, so paths with fewer than
    ``h`` frozen edges still reach the last forward copy; each loop through a
    jump edge then carries exactly ``2h`` terms ``+M`` against one ``-2hM``.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    g = fg.graph
    n = g.n
    fz = fg.frozen
    M = 1 + max([-g.edges[i].weight for i in fz if g.edges[i].weight < 0], default=0)
    if sample is None:
        sample = layered_sample(n, b, sample_multiplier, seed)
    sample = sorted(set(sample))
    edges: list[Edge] = []
    lift: list[tuple] = []
    kinds: list[str] = []

    def add(u, v, w, walk, kind):
        edges.append(Edge(u, v, w, len(edges)))
        lift.append(walk)
        kinds.append(kind)

    base = [e for e in g.edges if e.id not in fz]
    for layer in range(2 * h + 1):
        off = layer * n
        for e in base:
            add(off + e.src, off + e.dst, e.weight, (e.id,), "copy")
    # forward chain 0 -> 1 -> ... -> h, backward chain 2h -> ... -> h+1 -> 0
    steps = [(i, i + 1) for i in range(h)]
    steps += [(h + i, h + i - 1) for i in range(h, 1, -1)]
    steps.append((h + 1, 0))
    for a, c in steps:
        for eid in sorted(fz):
            e = g.edges[eid]
            add(a * n + e.src, c * n + e.dst, e.weight + M, (eid,), "lifted")
        for v in range(n):
            add(a * n + v, c * n + v, M, (), "stay")
    for w in sample:
        add(h * n + w, 2 * h * n + w, -2 * h * M, (), "jump")
    lg = Graph((2 * h + 1) * n, edges, g.mode)
    return LayeredInstance(lg, n, h, M, sample, lift, kinds)


def _default_oracle(g: Graph) -> SsspOutcome:
    from .driver import solve

    return solve(g, None)[0]


def extract_layered_potential(fg: FrozenGraph, inst: LayeredInstance,
                              oracle: Callable[[Graph], SsspOutcome] | None = None) -> SsspOutcome:
    """``phi(v) = dist(v_0)`` from a super-source on the layered graph, or a cycle of ``fg``."""
    res = (oracle or _default_oracle)(inst.graph)
    if res.has_cycle:
        walk = [x for eid in res.cycle_edges for x in inst.lift[eid]]
        cyc = simple_negative_cycle(fg.graph, walk)
        if cyc is None:
            raise RuntimeError("layered cycle does not map to a negative cycle")
        return SsspOutcome.from_cycle(fg.graph, cyc)
    phi = [res.dist[v] for v in range(inst.n_base)]
    return SsspOutcome(dist=list(phi), phi=phi)


def hop_betweenness(fg: FrozenGraph, h: int, phi=None) -> list[list[int]]:
    """Brute force ``count[u][v] = |{x : d^h(u, x) + d^h(x, v) < 0}|`` (after ``phi``)."""
    if phi is not None:
        fg = apply_potential(fg, phi)
    n = fg.n
    rows = [hop_sssp(fg, s, h).dist for s in range(n)]
    count = [[0] * n for _ in range(n)]
    for u in range(n):
        ru = rows[u]
        for x in range(n):
            a = ru[x]
            if a == math.inf:
                continue
            rx = rows[x]
            for v in range(n):
                if a + rx[v] < 0:
                    count[u][v] += 1
    return count


@dataclass
class HopReducer:
    graph: FrozenGraph
    n_base: int
    phi: list

    def copy1(self, v: int) -> int:
        return v

    def copy2(self, v: int) -> int:
        return self.n_base + v


def two_copy_hop_reducer(g: Graph, oracle: Callable[[Graph], SsspOutcome] | None = None):
    """Hop reducer with ``d_G(s, t) = d^1_H(s_1, t_1)``, or the oracle's cycle.

    ``G_1`` carries the non-negative edges of ``g`` at their weights, ``G_2`` all
    edges reweighted by ``phi = d(V, .)``. The cross edges ``(v_1, v_2)`` weigh
    ``phi_max - phi(v)`` and the back edges ``(v_2, v_1)`` weigh
    ``phi(v) - phi_max``; all ``n`` back edges are frozen, including those of
    weight zero, so hops count exactly the returns from ``G_2``.
    """
    res = (oracle or _default_oracle)(g)
    if res.has_cycle:
        return res
    phi = list(res.dist)
    n = g.n
    pmax = max(phi, default=0)
    edges: list[Edge] = []

    def add(u, v, w):
        edges.append(Edge(u, v, w, len(edges)))

    for e in g.edges:
        if e.weight >= 0:
            add(e.src, e.dst, e.weight)
    for e in g.edges:
        add(n + e.src, n + e.dst, e.weight + phi[e.src] - phi[e.dst])
    for v in range(n):
        add(v, n + v, pmax - phi[v])
    frozen = set()
    for v in range(n):
        frozen.add(len(edges))
        add(n + v, v, phi[v] - pmax)
    hg = Graph(2 * n, edges, g.mode)
    return HopReducer(FrozenGraph(hg, frozenset(frozen), (0,) * (2 * n)), n, phi)


__all__ = [
    "LayeredInstance",
    "build_layered",
    "extract_layered_potential",
    "hop_betweenness",
    "layered_sample",
    "HopReducer",
    "two_copy_hop_reducer",
]
