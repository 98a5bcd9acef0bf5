"""Two lazy Dijkstras from a negative vertex, stopped when their frontiers cancel.

Forward search (H1): all out-edges of ``r`` and the non-frozen edges, giving
``d^-(r, .)``. Backward search (H2): reversed non-frozen edges, giving
``d^0(., r)``. Settled vertices only ever push their lightest edge towards an
unsettled vertex, so work is quadratic in the number of settled vertices rather
than proportional to their degrees.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import INF, FrozenGraph


@dataclass
class BidiResult:
    r: int
    delta: object
    v_out: dict
    v_in: dict
    out_parent: dict = field(default_factory=dict, repr=False)
    in_parent: dict = field(default_factory=dict, repr=False)
    edges_examined: int = 0
    heap_ops: int = 0

    def path_out(self, fg: FrozenGraph, u: int) -> list[int]:
        """Edge ids of the forward tree path ``r -> u``."""
        path = []
        edges = fg.edges
        while u != self.r:
            e = self.out_parent[u]
            path.append(e)
            u = edges[e].src
        path.reverse()
        return path

    def path_in(self, fg: FrozenGraph, v: int) -> list[int]:
        """Edge ids of the backward tree path ``v -> r``."""
        path = []
        edges = fg.edges
        while v != self.r:
            e = self.in_parent[v]
            path.append(e)
            v = edges[e].dst
        return path


class _LazySearch:
    """One direction. ``lists[u]`` are edge ids sorted by weight; ``far`` picks the
    endpoint reached through an edge."""

    def __init__(self, fg, lists, far):
        self.edges = fg.edges
        self.lists = lists
        self.far = far
        self.dist: dict = {}
        self.parent: dict = {}
        self.ptr: dict = {}
        self.heap: list = []
        self.examined = 0
        self.heap_ops = 0

    def settle(self, v, d, via=None):
        self.dist[v] = d
        if via is not None:
            self.parent[v] = via
        self.ptr[v] = 0
        self._push_next(v)

    def _push_next(self, u):
        lst = self.lists(u)
        i = self.ptr[u]
        edges, dist, far = self.edges, self.dist, self.far
        while i < len(lst):
            e = edges[lst[i]]
            self.examined += 1
            i += 1
            x = far(e)
            if x not in dist:
                heapq.heappush(self.heap, (dist[u] + e.weight, x, u, e.id))
                self.heap_ops += 1
                break
        self.ptr[u] = i

    def top(self):
        heap = self.heap
        while heap and heap[0][1] in self.dist:
            _, _, owner, _ = heapq.heappop(heap)
            self.heap_ops += 1
            self._push_next(owner)
        return heap[0][0] if heap else INF

    def pop_settle(self):
        d, x, owner, eid = heapq.heappop(self.heap)
        self.heap_ops += 1
        self.settle(x, d, eid)
        self._push_next(owner)


def bidi_dijkstra(fg: FrozenGraph, r: int) -> BidiResult:
    """Threshold ``delta`` and the balanced sets ``v_out`` / ``v_in`` for ``r``.

    ``r`` is settled on both sides first and left out of both sets. Then the
    searches alternate, forward first; before every settle the run stops once
    ``d1 + d2 >= 0`` (``d_i`` = smallest tentative distance on side ``i``,
    ``inf`` when exhausted). ``delta`` is ``d2`` if the last settle was forward
    or nothing was settled, and ``-d1`` if it was backward.
    """
    g = fg.graph
    out_sorted = fg.sorted_out_nonneg
    in_sorted = fg.sorted_in_nonneg
    r_list = sorted(g.out_adj[r], key=lambda i: (g.edges[i].weight, i))
    fwd = _LazySearch(fg, lambda u: r_list if u == r else out_sorted[u], lambda e: e.dst)
    bwd = _LazySearch(fg, lambda u: in_sorted[u], lambda e: e.src)
    fwd.settle(r, 0)
    bwd.settle(r, 0)
    last = None
    turn = 1
    while True:
        d1, d2 = fwd.top(), bwd.top()
        if d1 + d2 >= 0:
            break
        (fwd if turn == 1 else bwd).pop_settle()
        last = turn
        turn = 3 - turn
    delta = -d1 if last == 2 else d2
    v_out = {v: d for v, d in fwd.dist.items() if v != r}
    v_in = {v: d for v, d in bwd.dist.items() if v != r}
    return BidiResult(
        r, delta, v_out, v_in, fwd.parent, bwd.parent,
        edges_examined=fwd.examined + bwd.examined,
        heap_ops=fwd.heap_ops + bwd.heap_ops,
    )
