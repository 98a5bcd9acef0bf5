from negsssp.graph import build_graph, freeze
from negsssp.hops import hop_sssp
from negsssp.split import split_negative_vertices

from graphkit import hop_rows, random_graph


def _edges(fg):
    return sorted((e.src, e.dst, e.weight, e.id in fg.frozen) for e in fg.edges)


def test_literal_construction_moves_every_out_edge():
    u, a, b, c = range(4)
    g = build_graph(4, [(u, a, -5), (u, b, -3), (u, c, 2)])
    fg, mapping, lift = split_negative_vertices(freeze(g), move_all=True)
    up = mapping[u]
    assert up == 4
    assert _edges(fg) == [(u, up, -5, True), (up, a, 0, False), (up, b, 2, False), (up, c, 7, False)]
    assert lift[3] == ()


def test_default_keeps_nonnegative_out_edges_at_u():
    u, a, b, c = range(4)
    g = build_graph(4, [(u, a, -5), (u, b, -3), (u, c, 2)])
    fg, mapping, _ = split_negative_vertices(freeze(g))
    up = mapping[u]
    assert _edges(fg) == [(u, c, 2, False), (u, up, -5, True), (up, a, 0, False), (up, b, 2, False)]
    # ids survive the move
    assert fg.edges[0] == (up, a, 0, 0)


def test_literal_construction_loses_zero_hop_paths():
    # why the default leaves non-frozen edges alone
    g = build_graph(3, [(0, 1, -1), (0, 2, 4)])
    lit, _, _ = split_negative_vertices(freeze(g), move_all=True)
    ours, _, _ = split_negative_vertices(freeze(g))
    assert hop_sssp(freeze(g), 0, 0).dist[2] == 4
    assert hop_sssp(ours, 0, 0).dist[2] == 4
    assert hop_sssp(lit, 0, 0).dist[2] == float("inf")


def test_no_negative_vertices_is_a_no_op():
    fg = freeze(build_graph(3, [(0, 1, 1)]))
    out, mapping, lift = split_negative_vertices(fg)
    assert out is fg and mapping == {} and lift == [(0,)]


def test_ties_broken_by_lowest_id():
    g = build_graph(3, [(0, 2, -3), (0, 1, -3)])
    fg, mapping, _ = split_negative_vertices(freeze(g))
    assert [e.weight for e in fg.edges] == [0, 0, -3]
    assert fg.edges[0].src == mapping[0] == 3


def test_counts_and_structure():
    for seed in range(15):
        fg0 = freeze(random_graph(12, 40, seed))
        k = len(fg0.negative_vertices)
        fg, mapping, lift = split_negative_vertices(fg0)
        assert fg.n == fg0.n + k and fg.graph.m == fg0.graph.m + k
        assert fg.negative_vertices == fg0.negative_vertices
        per_vertex = [len(fg.frozen_out(v)) for v in range(fg.n)]
        assert max(per_vertex, default=0) <= 1 and sum(per_vertex) == k
        assert all(e.weight >= 0 for e in fg.edges if e.id not in fg.frozen)
        assert len(lift) == fg.graph.m


def test_hop_distances_preserved():
    for seed in range(8):
        fg0 = freeze(random_graph(15, 45, 100 + seed))
        fg, _, _ = split_negative_vertices(fg0)
        for h in range(6):
            before = hop_rows(fg0, h)
            after = hop_rows(fg, h, range(fg0.n))
            for s in range(fg0.n):
                assert after[s][: fg0.n] == before[s], (seed, h, s)
