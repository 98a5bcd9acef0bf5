"""Dijkstra, Bellman-Ford and the hop-limited Dijkstra/Bellman-Ford hybrid.

``d^h(s, t)`` is the lightest ``s -> t`` path that uses at most ``h`` frozen edges.
The hybrid computes it with ``h + 1`` Dijkstra passes over the non-frozen edges,
separated by single Jacobi sweeps over the frozen edges.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import INF, FrozenGraph, Graph, PreconditionError, SsspOutcome, cycle_vertices


@dataclass
class HopTable:
    source: object
    h: int
    dist: list


@dataclass
class FinishResult:
    dist: list
    pred: list
    cycle_edges: list | None
    rounds: int
    extra_rounds: int


def seed_labels(n: int, source) -> dict:
    """Normalise a source spec: vertex id, ``None`` (super-source), iterable, or dict."""
    if source is None:
        return {v: 0 for v in range(n)}
    if isinstance(source, dict):
        return dict(source)
    if isinstance(source, int):
        if not 0 <= source < n:
            raise PreconditionError(f"source {source} out of range")
        return {source: 0}
    return {int(v): 0 for v in source}


def _relax_free(free_out, dist, pred, starts) -> None:
    heap = [(dist[v], v) for v in starts if dist[v] != INF]
    heapq.heapify(heap)
    while heap:
        d, u = heapq.heappop(heap)
        if d != dist[u]:
            continue
        for v, w, eid in free_out[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = eid
                heapq.heappush(heap, (nd, v))


def _sweep_frozen(frozen_list, dist, pred) -> list[int]:
    # Jacobi: every relaxation reads pre-sweep labels so a sweep adds one hop at most
    old = dist[:]
    changed = []
    for e in frozen_list:
        du = old[e.src]
        if du == INF:
            continue
        nd = du + e.weight
        if nd < dist[e.dst]:
            if dist[e.dst] == old[e.dst]:
                changed.append(e.dst)
            dist[e.dst] = nd
            pred[e.dst] = e.id
    return changed


def pred_cycle(edges, pred: list) -> list[int] | None:
    """Any cycle of the predecessor graph, as edge ids in forward order."""
    n = len(pred)
    state = [0] * n
    for s in range(n):
        if state[s]:
            continue
        path = []
        v = s
        while v != -1 and state[v] == 0:
            state[v] = 1
            path.append(v)
            e = pred[v]
            v = edges[e].src if e != -1 else -1
        if v != -1 and state[v] == 1:
            cyc = []
            x = v
            while True:
                e = pred[x]
                cyc.append(e)
                x = edges[e].src
                if x == v:
                    break
            cyc.reverse()
            return cyc
        for x in path:
            state[x] = 2
    return None


def finish(fg: FrozenGraph, source, h: int, extra_cap: int | None = None) -> FinishResult:
    """Hybrid with ``h`` frozen sweeps, then a verification sweep.

    If the verification sweep still improves a label the hop bound was too small
    or a negative cycle is reachable; rounds continue until either the labels
    settle (reported through ``extra_rounds``) or the predecessor graph closes a
    cycle, which is then necessarily negative.
    """
    n = fg.n
    dist = [INF] * n
    pred = [-1] * n
    for v, lab in seed_labels(n, source).items():
        if lab < dist[v]:
            dist[v] = lab
    free_out = fg.free_out
    frozen_list = fg.frozen_list
    _relax_free(free_out, dist, pred, range(n))
    for _ in range(h):
        changed = _sweep_frozen(frozen_list, dist, pred)
        if not changed:
            break
        _relax_free(free_out, dist, pred, changed)
    changed = _sweep_frozen(frozen_list, dist, pred)
    if not changed:
        return FinishResult(dist, pred, None, h, 0)
    cap = extra_cap if extra_cap is not None else n + len(frozen_list) + 2
    extra = 0
    while extra < cap:
        extra += 1
        _relax_free(free_out, dist, pred, changed)
        cyc = pred_cycle(fg.edges, pred)
        if cyc is not None:
            return FinishResult(dist, pred, cyc, h, extra)
        changed = _sweep_frozen(frozen_list, dist, pred)
        if not changed:
            return FinishResult(dist, pred, None, h, extra)
        cyc = pred_cycle(fg.edges, pred)
        if cyc is not None:
            return FinishResult(dist, pred, cyc, h, extra)
    bf = bellman_ford(fg.graph, seed_labels(n, source))
    if not bf.has_cycle:
        raise RuntimeError("hop rounds failed to settle on a cycle-free graph")
    return FinishResult(dist, pred, bf.cycle_edges, h, extra)


def hop_sssp(fg: FrozenGraph, source, h: int) -> HopTable:
    """``d^h(source, .)`` by ``h + 1`` Dijkstra passes and ``h`` frozen sweeps."""
    if h < 0:
        raise ValueError("hop bound must be non-negative")
    n = fg.n
    dist = [INF] * n
    pred = [-1] * n
    for v, lab in seed_labels(n, source).items():
        dist[v] = min(dist[v], lab)
    _relax_free(fg.free_out, dist, pred, range(n))
    for _ in range(h):
        changed = _sweep_frozen(fg.frozen_list, dist, pred)
        if not changed:
            break
        _relax_free(fg.free_out, dist, pred, changed)
    return HopTable(source, h, dist)


def dijkstra(fg: FrozenGraph | Graph, source: int, edge_filter: Callable | None = None) -> list:
    """Plain Dijkstra over the edges admitted by ``edge_filter``.

    The default filter admits the non-frozen edges. Admitted negative edges are
    allowed only when they leave ``source``.
    """
    if isinstance(fg, FrozenGraph):
        g = fg.graph
        if edge_filter is None:
            fz = fg.frozen
            edge_filter = lambda e: e.id not in fz  # noqa: E731
    else:
        g = fg
        if edge_filter is None:
            edge_filter = lambda e: True  # noqa: E731
    adj: list[list[tuple]] = [[] for _ in range(g.n)]
    for e in g.edges:
        if not edge_filter(e):
            continue
        if e.weight < 0 and e.src != source:
            raise PreconditionError(f"negative edge {e.id} does not leave the source")
        adj[e.src].append((e.dst, e.weight, e.id))
    return _single_source(g.n, adj, source)


def _single_source(n, adj, source, source_adj=None) -> list:
    # the source is settled at 0 first and never revisited
    dist = [INF] * n
    dist[source] = 0
    done = [False] * n
    done[source] = True
    heap = []
    for v, w, _ in (adj[source] if source_adj is None else source_adj):
        if v != source and w < dist[v]:
            dist[v] = w
            heapq.heappush(heap, (w, v))
    while heap:
        d, u = heapq.heappop(heap)
        if done[u] or d != dist[u]:
            continue
        done[u] = True
        for v, w, _ in adj[u]:
            nd = d + w
            if nd < dist[v] and not done[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def d_minus_from(fg: FrozenGraph, r: int) -> list:
    """``d^-(r, .)``: any out-edge of ``r`` first, then non-frozen edges only."""
    g = fg.graph
    first = [(g.edges[e].dst, g.edges[e].weight, e) for e in g.out_adj[r]]
    return _single_source(fg.n, fg.free_out, r, first)


def d_zero_to(fg: FrozenGraph, r: int) -> list:
    """``result[v] = d^0(v, r)`` via Dijkstra on the reversed non-frozen edges."""
    g = fg.graph
    rev: list[list[tuple]] = [[] for _ in range(fg.n)]
    for ids in fg.sorted_in_nonneg:
        for eid in ids:
            e = g.edges[eid]
            rev[e.dst].append((e.src, e.weight, eid))
    return _single_source(fg.n, rev, r)


def _outcome(g: Graph, fin: FinishResult, super_source: bool) -> SsspOutcome:
    if fin.cycle_edges is not None:
        return SsspOutcome.from_cycle(g, fin.cycle_edges)
    return SsspOutcome(
        dist=fin.dist,
        phi=list(fin.dist) if super_source else None,
        extra={"extra_rounds": fin.extra_rounds},
    )


def two_hop_finish(fg: FrozenGraph, source) -> SsspOutcome:
    """2-hop distances plus one verification sweep that exposes negative cycles."""
    return _outcome(fg.graph, finish(fg, source, 2), source is None)


def solve_naive(fg: FrozenGraph, source=None) -> SsspOutcome:
    """Exact SSSP by ``k``-hop distances, ``k`` = number of negative vertices.

    A simple path leaves each negative vertex once, so ``d^k = d`` without
    negative cycles.
    """
    k = len(fg.negative_vertices)
    return _outcome(fg.graph, finish(fg, source, k), source is None)


def bellman_ford(g: Graph | FrozenGraph, source=None) -> SsspOutcome:
    """Ground-truth Bellman-Ford; ``source=None`` means a virtual super-source.

    A cycle witness comes from walking predecessor links from a vertex that still
    improves after ``n`` passes.
    """
    if isinstance(g, FrozenGraph):
        g = g.graph
    n = g.n
    edges = g.edges
    dist = [INF] * n
    pred = [-1] * n
    for v, lab in seed_labels(n, source).items():
        dist[v] = min(dist[v], lab)
    last = -1
    passes = 0
    limit = max(n, 1)
    while True:
        passes += 1
        last = -1
        for e in edges:
            du = dist[e.src]
            if du == INF:
                continue
            nd = du + e.weight
            if nd < dist[e.dst]:
                dist[e.dst] = nd
                pred[e.dst] = e.id
                last = e.dst
        if last == -1:
            return SsspOutcome(dist=dist, phi=list(dist) if source is None else None)
        if passes >= limit:
            cyc = _walk_back(edges, pred, last, n)
            if cyc is None:
                cyc = pred_cycle(edges, pred)
            if cyc is not None:
                return SsspOutcome(cycle=cycle_vertices(g, cyc), cycle_edges=cyc)
            if passes > 4 * limit + 8:
                raise RuntimeError("Bellman-Ford could not isolate a cycle")


def _walk_back(edges, pred, x, n) -> list[int] | None:
    y = x
    for _ in range(n):
        e = pred[y]
        if e == -1:
            return None
        y = edges[e].src
    cyc = []
    v = y
    while True:
        e = pred[v]
        if e == -1:
            return None
        cyc.append(e)
        v = edges[e].src
        if v == y:
            break
        if len(cyc) > n:
            return None
    cyc.reverse()
    return cyc


def bellman_ford_all_pairs(g: Graph | FrozenGraph, sources: Iterable[int] | None = None) -> dict:
    if isinstance(g, FrozenGraph):
        g = g.graph
    src = range(g.n) if sources is None else sources
    return {s: bellman_ford(g, s) for s in src}
