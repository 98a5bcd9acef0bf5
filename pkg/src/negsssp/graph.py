"""Directed weighted multigraphs, potentials and edge freezing.

Weights are plain Python numbers. In ``"rational"`` mode they are ``int`` or
``fractions.Fraction`` (ints are kept as ints, they are exact rationals and much
faster); in ``"float"`` mode they are ``float``. ``math.inf`` is the unreachable
sentinel in both modes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

INF = math.inf
MODES = ("rational", "float")


class GraphError(ValueError):
    """Malformed graph construction."""


class PotentialError(ValueError):
    """A potential would turn a non-frozen edge negative."""


class PreconditionError(ValueError):
    pass


class Edge(NamedTuple):
    src: int
    dst: int
    weight: object
    id: int


def coerce_weight(x, mode: str = "rational"):
    """Convert ``x`` to the weight type of ``mode``.

    Strings are parsed exactly in rational mode (``"-2.5"`` -> ``Fraction(-5, 2)``).
    """
    if mode == "float":
        val = float(x)
    elif mode == "rational":
        if isinstance(x, bool):
            raise GraphError(f"bad weight {x!r}")
        if isinstance(x, int):
            return x
        val = Fraction(x) if not isinstance(x, Fraction) else x
        if val.denominator == 1:
            return int(val.numerator)
        return val
    else:
        raise GraphError(f"unknown numeric mode {mode!r}")
    if not math.isfinite(val):
        raise GraphError(f"weight must be finite, got {x!r}")
    return val


def add_weights(a, b):
    """``a + b`` where ``inf - inf`` is a bug rather than ``nan``."""
    if a == INF and b == -INF or a == -INF and b == INF:
        raise ArithmeticError("inf - inf")
    return a + b


class Graph:
    """Immutable directed multigraph on vertices ``0..n-1``.

    Parallel edges and self-loops are kept. Edge ids are positions in ``edges``.
    """

    def __init__(self, n: int, edges: Sequence[Edge], mode: str = "rational"):
        self.n = n
        self.edges = list(edges)
        self.mode = mode
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for e in self.edges:
            out_adj[e.src].append(e.id)
            in_adj[e.dst].append(e.id)
        self.out_adj = out_adj
        self.in_adj = in_adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, eid: int):
        return self.edges[eid].weight

    @cached_property
    def sorted_out_nonneg(self) -> list[list[int]]:
        return _sorted_lists(self.edges, self.out_adj, lambda e: e.weight >= 0)

    @cached_property
    def sorted_in_nonneg(self) -> list[list[int]]:
        return _sorted_lists(self.edges, self.in_adj, lambda e: e.weight >= 0)

    def edge_list(self) -> list[tuple]:
        return [(e.src, e.dst, e.weight) for e in self.edges]

    def max_abs_weight(self):
        return max((abs(e.weight) for e in self.edges), default=0)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, mode={self.mode!r})"


def _sorted_lists(edges, adj, keep) -> list[list[int]]:
    return [
        sorted((eid for eid in ids if keep(edges[eid])), key=lambda i: (edges[i].weight, i))
        for ids in adj
    ]


def build_graph(n: int, edge_list: Iterable[tuple], mode: str = "rational") -> Graph:
    """Build a :class:`Graph` from ``(src, dst, weight)`` triples."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if mode not in MODES:
        raise GraphError(f"unknown numeric mode {mode!r}")
    edges = []
    for i, (u, v, w) in enumerate(edge_list):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {i} ({u}, {v}) has an endpoint outside [0, {n})")
        edges.append(Edge(int(u), int(v), coerce_weight(w, mode), i))
    return Graph(n, edges, mode)


@dataclass(frozen=True, eq=False)
class FrozenGraph:
    """A graph whose weights are the current (reweighted) ones, plus the frozen set.

    Hop counting everywhere counts edges in ``frozen``, whatever their current sign.
    ``cumulative_phi`` is the potential accumulated since the original input.
    """

    graph: Graph
    frozen: frozenset
    cumulative_phi: tuple

    def __post_init__(self):
        g = self.graph
        for e in g.edges:
            if e.weight < 0 and e.id not in self.frozen:
                raise PreconditionError(f"negative edge {e.id} is not frozen")
        if len(self.cumulative_phi) != g.n:
            raise PreconditionError("potential length differs from vertex count")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> list[Edge]:
        return self.graph.edges

    @property
    def mode(self) -> str:
        return self.graph.mode

    @cached_property
    def negative_vertices(self) -> frozenset:
        edges = self.graph.edges
        return frozenset(edges[eid].src for eid in self.frozen)

    @cached_property
    def sorted_out_nonneg(self) -> list[list[int]]:
        """Non-frozen out-edges per vertex, ascending by (weight, id)."""
        fz = self.frozen
        return _sorted_lists(self.graph.edges, self.graph.out_adj, lambda e: e.id not in fz)

    @cached_property
    def sorted_in_nonneg(self) -> list[list[int]]:
        fz = self.frozen
        return _sorted_lists(self.graph.edges, self.graph.in_adj, lambda e: e.id not in fz)

    @cached_property
    def free_out(self) -> list[list[tuple]]:
        """``(dst, weight, id)`` of non-frozen out-edges; hot-loop form."""
        fz = self.frozen
        res: list[list[tuple]] = [[] for _ in range(self.graph.n)]
        for e in self.graph.edges:
            if e.id not in fz:
                res[e.src].append((e.dst, e.weight, e.id))
        return res

    @cached_property
    def frozen_list(self) -> list[Edge]:
        edges = self.graph.edges
        return [edges[i] for i in sorted(self.frozen)]

    def frozen_out(self, u: int) -> list[int]:
        fz = self.frozen
        return [eid for eid in self.graph.out_adj[u] if eid in fz]


def freeze(g: Graph) -> FrozenGraph:
    """Freeze every currently negative edge; cumulative potential starts at zero."""
    frozen = frozenset(e.id for e in g.edges if e.weight < 0)
    return FrozenGraph(g, frozen, (0,) * g.n)


def unfreeze(fg: FrozenGraph) -> FrozenGraph:
    """Recompute the frozen set as the currently negative edges."""
    frozen = frozenset(e.id for e in fg.graph.edges if e.weight < 0)
    return FrozenGraph(fg.graph, frozen, fg.cumulative_phi)


def reweighted(w, pu, pv):
    return w + pu - pv


def check_potential(fg: FrozenGraph, phi: Sequence, tol=0) -> list[int]:
    """Ids of non-frozen edges that ``phi`` would push below ``-tol``."""
    bad = []
    for e in fg.graph.edges:
        if e.id in fg.frozen:
            continue
        if e.weight + phi[e.src] - phi[e.dst] < -tol:
            bad.append(e.id)
    return bad


def apply_potential(fg: FrozenGraph, phi: Sequence, tol=0) -> FrozenGraph:
    """Reweight by ``w + phi(src) - phi(dst)``, keeping the frozen set.

    Non-frozen edges landing in ``[-tol, 0)`` are clamped to zero (float mode only
    passes a positive ``tol``); anything lower raises :class:`PotentialError`.
    """
    g = fg.graph
    if len(phi) != g.n:
        raise PotentialError("potential length differs from vertex count")
    if any(p == INF or p == -INF for p in phi):
        raise PotentialError("potential must be finite")
    fz = fg.frozen
    edges = []
    for e in g.edges:
        w = e.weight + phi[e.src] - phi[e.dst]
        if e.id not in fz and w < 0:
            if w < -tol:
                raise PotentialError(f"edge {e.id} ({e.src}->{e.dst}) becomes {w}")
            w = 0 * w
        edges.append(Edge(e.src, e.dst, w, e.id))
    cum = tuple(a + b for a, b in zip(fg.cumulative_phi, phi))
    return FrozenGraph(Graph(g.n, edges, g.mode), fz, cum)


def cycle_weight(g: Graph, cycle_edges: Sequence[int]):
    return sum((g.edges[i].weight for i in cycle_edges), 0)


def is_closed_walk(g: Graph, walk: Sequence[int]) -> bool:
    if not walk:
        return False
    edges = g.edges
    for a, b in zip(walk, list(walk[1:]) + [walk[0]]):
        if edges[a].dst != edges[b].src:
            return False
    return True


def simple_negative_cycle(g: Graph, walk: Sequence[int]) -> list[int] | None:
    """Split a closed walk (edge ids) into simple cycles; return the lightest negative one."""
    if not walk:
        return None
    edges = g.edges
    verts = [edges[walk[0]].src]  # stack[j] runs verts[j] -> verts[j+1]
    stack: list[int] = []
    pos = {verts[0]: 0}
    best, best_w = None, 0
    for eid in walk:
        v = edges[eid].dst
        if v in pos:
            i = pos[v]
            cyc = stack[i:] + [eid]
            w = sum((edges[c].weight for c in cyc), 0)
            if w < best_w:
                best, best_w = cyc, w
            for x in verts[i + 1:]:
                del pos[x]
            del verts[i + 1:]
            del stack[i:]
        else:
            stack.append(eid)
            verts.append(v)
            pos[v] = len(verts) - 1
    return best


def cycle_vertices(g: Graph, cycle_edges: Sequence[int]) -> list[int]:
    return [g.edges[i].src for i in cycle_edges]


@dataclass
class SsspOutcome:
    """Distances plus a potential, or a negative-cycle witness.

    ``cycle`` lists vertices ``c0..c_{l-1}`` (edges ``c_i -> c_{i+1 mod l}``);
    ``cycle_edges`` names the exact parallel edges used.
    """

    dist: list | None = None
    phi: list | None = None
    cycle: list | None = None
    cycle_edges: list | None = None
    extra: dict = field(default_factory=dict)

    @property
    def has_cycle(self) -> bool:
        return self.cycle_edges is not None

    @classmethod
    def from_cycle(cls, g: Graph, cycle_edges: Sequence[int]) -> "SsspOutcome":
        ce = list(cycle_edges)
        return cls(cycle=cycle_vertices(g, ce), cycle_edges=ce)
