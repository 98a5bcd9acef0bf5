"""One round of shortcutting: Steiner vertices plus five families of new edges."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bidi import BidiResult
from .graph import INF, Edge, FrozenGraph, Graph, PreconditionError


@dataclass
class ShortcutReport:
    steiner_count: int = 0
    edges_added: list = field(default_factory=lambda: [0, 0, 0, 0, 0])  # by step 1..5; step 1 adds the vertex only
    sum_sq: int = 0
    sum_lin: int = 0
    pruned: int = 0
    audit: list | None = None

    @property
    def total_added(self) -> int:
        return sum(self.edges_added)

    def as_dict(self) -> dict:
        return {
            "steiner_count": self.steiner_count,
            "edges_added": list(self.edges_added),
            "sum_sq": self.sum_sq,
            "sum_lin": self.sum_lin,
            "pruned": self.pruned,
        }


def shortcut_step(fg: FrozenGraph, bidi: dict, tol=0, audit: bool = False, prune: bool = False):
    """Add a Steiner vertex ``rt`` per negative vertex ``r`` and the shortcut edges.

    With ``dm = d^-(r, .)`` on ``v_out + {r}`` and ``d0 = d^0(., r)`` on ``v_in + {r}``:

    2. ``(rt, v)``  weight ``dm[u] + delta + w(u, v)`` for out-edges of ``u``, if >= 0
    3. ``(u, rt)``  weight ``w(u, v) + d0[v] - delta`` for in-edges of ``v``, if >= 0
    4. ``(r, v)``   weight ``dm[u] + w(u, v)``, frozen iff negative
    5. ``(u, r')``  weight ``w(u, v) + d0[v] + w(r, r')`` when ``u`` is negative,
       frozen iff negative

    Steps 2 and 3 are skipped when ``delta`` is infinite. ``tol`` is the float
    slack: weights in ``[-tol, 0)`` count as zero.

    With ``prune`` the result keeps, per ordered pair and frozen status, only the
    lightest edge, drops a frozen edge beaten by a non-frozen parallel one, and
    drops non-negative self-loops. None of these can lie on a path that is
    better in both weight and frozen-hop count, so every ``d^h`` is unchanged.
    Edge ids are then renumbered.

    Returns ``(new_graph, report, lift)``; ``lift[eid]`` is the walk of old edge
    ids that edge ``eid`` expands to (Steiner edges expand to walks through ``r``).
    """
    g = fg.graph
    neg = sorted(fg.negative_vertices)
    missing = [r for r in neg if r not in bidi]
    if missing:
        raise PreconditionError(f"no bidirectional result for negative vertices {missing}")
    n = g.n
    edges = list(g.edges)
    lift: list[tuple] = [(e.id,) for e in edges]
    frozen = set(fg.frozen)
    report = ShortcutReport(audit=[] if audit else None)
    neg_set = fg.negative_vertices
    zero = 0

    def add(step, u, v, w, walk, may_freeze):
        if w < 0:
            if w >= -tol:
                w = zero * w
            elif not may_freeze:
                return
        eid = len(edges)
        edges.append(Edge(u, v, w, eid))
        lift.append(tuple(walk))
        if w < 0:
            frozen.add(eid)
        report.edges_added[step - 1] += 1
        if audit:
            report.audit.append((step, r, u, v, w))

    for idx, r in enumerate(neg):
        res: BidiResult = bidi[r]
        fout = fg.frozen_out(r)
        if len(fout) != 1:
            raise PreconditionError(f"negative vertex {r} needs exactly one frozen out-edge")
        rr = g.edges[fout[0]]
        rt = n + idx
        delta = res.delta
        size = len(res.v_out) + len(res.v_in)
        report.sum_sq += size * size
        report.sum_lin += size
        dm = {r: 0, **res.v_out}
        d0 = {r: 0, **res.v_in}
        out_paths = {u: res.path_out(fg, u) for u in dm}
        in_paths = {v: res.path_in(fg, v) for v in d0}
        finite = delta != INF
        # step 1 is the vertex id rt itself; steps 2 and 4 share the loop
        for u in sorted(dm):
            pu = out_paths[u]
            for eid in g.out_adj[u]:
                e = g.edges[eid]
                base = dm[u] + e.weight
                if finite:
                    add(2, rt, e.dst, base + delta, pu + [eid], False)
                add(4, r, e.dst, base, pu + [eid], True)
        for v in sorted(d0):
            pv = in_paths[v]
            for eid in g.in_adj[v]:
                e = g.edges[eid]
                base = e.weight + d0[v]
                if finite:
                    add(3, e.src, rt, base - delta, [eid] + pv, False)
                if e.src in neg_set:
                    add(5, e.src, rr.dst, base + rr.weight, [eid] + pv + [rr.id], True)
    report.steiner_count = len(neg)
    phi = tuple(fg.cumulative_phi) + (0,) * len(neg)
    if prune:
        edges, frozen, lift = _prune(edges, frozen, lift, report)
    new = Graph(n + len(neg), edges, g.mode)
    return FrozenGraph(new, frozenset(frozen), phi), report, lift


def _prune(edges, frozen, lift, report):
    best: dict = {}
    for e in edges:
        if e.src == e.dst and e.weight >= 0:
            continue
        key = (e.src, e.dst, e.id in frozen)
        cur = best.get(key)
        if cur is None or e.weight < cur.weight:
            best[key] = e
    keep = []
    for e in edges:
        key = (e.src, e.dst, e.id in frozen)
        if best.get(key) is not e:
            continue
        if key[2]:
            free = best.get((e.src, e.dst, False))
            if free is not None and free.weight <= e.weight:
                continue
        keep.append(e)
    report.pruned = len(edges) - len(keep)
    new_edges, new_frozen, new_lift = [], set(), []
    for e in keep:
        nid = len(new_edges)
        new_edges.append(Edge(e.src, e.dst, e.weight, nid))
        new_lift.append(lift[e.id])
        if e.id in frozen:
            new_frozen.add(nid)
    return new_edges, new_frozen, new_lift
