"""Give every negative vertex exactly one frozen outgoing edge."""
from __future__ import annotations

from .graph import Edge, FrozenGraph, Graph


def split_negative_vertices(fg: FrozenGraph, move_all: bool = False):
    """Split each negative vertex ``u`` into ``u -> u'``.

    The lightest frozen out-edge ``(u, v1)`` (ties: lowest id) becomes the new
    frozen edge ``(u, u')``, and every frozen out-edge ``(u, vi)`` is re-hung as
    ``(u', vi)`` with weight ``w(u, vi) - w(u, v1) >= 0``, non-frozen, keeping its
    id. Non-frozen out-edges stay at ``u`` so no path gains a frozen hop; with
    ``move_all=True`` they are re-hung at ``u'`` too (that variant preserves
    distances but not hop-limited distances).

    Returns ``(new_graph, mapping u -> u', lift)`` where ``lift[eid]`` is the walk
    of old edge ids that edge ``eid`` stands for.
    """
    g = fg.graph
    n = g.n
    edges = list(g.edges)
    lift: list[tuple] = [(e.id,) for e in edges]
    frozen = set(fg.frozen)
    mapping: dict[int, int] = {}
    phi = list(fg.cumulative_phi)
    for u in sorted(fg.negative_vertices):
        moved = g.out_adj[u] if move_all else fg.frozen_out(u)
        lightest = min(moved, key=lambda i: (g.edges[i].weight, i))
        w1 = g.edges[lightest].weight
        up = n + len(mapping)
        mapping[u] = up
        for eid in moved:
            e = g.edges[eid]
            edges[eid] = Edge(up, e.dst, e.weight - w1, eid)
            frozen.discard(eid)
        nid = len(edges)
        edges.append(Edge(u, up, w1, nid))
        lift.append(())
        frozen.add(nid)
        phi.append(0)
    if not mapping:
        return fg, {}, lift
    new = Graph(n + len(mapping), edges, g.mode)
    return FrozenGraph(new, frozenset(frozen), tuple(phi)), mapping, lift
