import math

import pytest

from negsssp.generators import gen_planted_cycle, gen_potential_shifted
from negsssp.graph import PreconditionError, apply_potential, build_graph, cycle_weight, freeze
from negsssp.hops import (
    bellman_ford,
    d_minus_from,
    d_zero_to,
    dijkstra,
    finish,
    hop_sssp,
    solve_naive,
    two_hop_finish,
)

from graphkit import random_graph

INF = math.inf


def test_dijkstra_no_edges():
    assert dijkstra(build_graph(3, []), 1) == [INF, 0, INF]


def test_dijkstra_chain():
    assert dijkstra(build_graph(3, [(0, 1, 2), (1, 2, 3)]), 0) == [0, 2, 5]


def test_dijkstra_negative_edge_at_source():
    g = build_graph(2, [(0, 1, -4)])
    assert dijkstra(g, 0) == [0, -4]
    assert dijkstra(freeze(g), 0, lambda e: True) == [0, -4]


def test_dijkstra_rejects_other_negative_edges():
    g = build_graph(3, [(0, 1, 1), (1, 2, -1)])
    with pytest.raises(PreconditionError):
        dijkstra(g, 0)


def test_hop_example():
    fg = freeze(build_graph(3, [(0, 1, -1), (1, 2, -1), (0, 2, 0)]))
    assert hop_sssp(fg, 0, 0).dist[2] == 0
    assert hop_sssp(fg, 0, 1).dist[2] == 0
    assert hop_sssp(fg, 0, 2).dist[2] == -2


def test_zero_hops_all_frozen():
    fg = freeze(build_graph(3, [(0, 1, -1), (1, 2, -1)]))
    assert hop_sssp(fg, 0, 0).dist == [0, INF, INF]


def test_hops_bounded_even_with_negative_cycle():
    fg = freeze(build_graph(2, [(0, 1, -2), (1, 0, 1)]))
    # every trip round the cycle costs one frozen hop and gains 1
    assert hop_sssp(fg, 0, 1).dist == [-1, -2]
    assert hop_sssp(fg, 0, 3).dist == [-3, -4]


def test_hop_sssp_rejects_negative_h():
    with pytest.raises(ValueError):
        hop_sssp(freeze(build_graph(1, [])), 0, -1)


def test_bellman_ford_dag():
    assert bellman_ford(build_graph(3, [(0, 1, -2), (1, 2, -3)]), 0).dist == [0, -2, -5]


def test_bellman_ford_two_cycle():
    g = build_graph(2, [(0, 1, -2), (1, 0, 1)])
    out = bellman_ford(g, 0)
    assert sorted(out.cycle) == [0, 1]
    assert cycle_weight(g, out.cycle_edges) == -1


def test_bellman_ford_super_source_potential():
    g = gen_potential_shifted(20, 70, 0.2, (0, 9), 11)
    out = bellman_ford(g)
    assert max(out.phi) == 0
    fg = apply_potential(freeze(g), out.phi)
    assert all(e.weight >= 0 for e in fg.edges)
    for s in (0, 5, 13):
        ref = bellman_ford(g, s).dist
        viaj = dijkstra(fg.graph, s)
        back = [d - out.phi[s] + out.phi[t] if d != INF else INF for t, d in enumerate(viaj)]
        assert back == ref


def test_bellman_ford_witness_is_negative():
    for seed in range(20):
        g = random_graph(8, 20, seed, lo=-8, hi=4)
        out = bellman_ford(g)
        if out.has_cycle:
            assert cycle_weight(g, out.cycle_edges) < 0


def test_d_minus_examples():
    fg = freeze(build_graph(3, [(1, 0, 3)]))
    assert d_minus_from(fg, 0) == [0, INF, INF]
    fg = freeze(build_graph(3, [(0, 1, -4), (1, 2, 1)]))
    assert d_minus_from(fg, 0) == [0, -4, -3]


def test_d_minus_sandwiched():
    for seed in range(10):
        fg = freeze(random_graph(9, 25, seed))
        for r in range(9):
            d0 = hop_sssp(fg, r, 0).dist
            d1 = hop_sssp(fg, r, 1).dist
            dm = d_minus_from(fg, r)
            for v in range(9):
                if v == r:
                    continue
                assert d0[v] >= dm[v] >= d1[v]


def test_d_zero_to_examples():
    fg = freeze(build_graph(3, [(1, 0, 1)]))
    assert d_zero_to(fg, 0)[1] == 1
    fg = freeze(build_graph(3, [(1, 0, -1)]))
    assert d_zero_to(fg, 0)[1] == INF


def test_d_zero_to_is_transposed_zero_hop():
    for seed in range(5):
        fg = freeze(random_graph(10, 30, seed))
        rows = [hop_sssp(fg, v, 0).dist for v in range(10)]
        for r in range(10):
            col = d_zero_to(fg, r)
            assert col == [rows[v][r] for v in range(10)]


def test_two_hop_finish_without_frozen_edges_is_dijkstra():
    g = gen_potential_shifted(15, 40, 0.0, (0, 9), 2)
    assert two_hop_finish(freeze(g), 0).dist == dijkstra(g, 0)


def test_two_hop_finish_detects_planted_cycle():
    g, ids = gen_planted_cycle(12, 30, 3, -2, seed=4)
    out = two_hop_finish(freeze(g), 0)
    assert out.has_cycle and cycle_weight(g, out.cycle_edges) < 0


def test_two_hop_finish_matches_bellman_ford():
    for seed in range(10):
        g = gen_potential_shifted(25, 90, 0.3, (0, 9), seed)
        assert two_hop_finish(freeze(g), 0).dist == bellman_ford(g, 0).dist


def test_solve_naive_matches_bellman_ford_and_settles():
    for seed in range(10):
        g = gen_potential_shifted(25, 90, 0.3, (0, 9), seed)
        fg = freeze(g)
        out = solve_naive(fg, 3)
        assert out.dist == bellman_ford(g, 3).dist
        assert out.extra["extra_rounds"] == 0


def test_finish_with_seeded_labels():
    fg = freeze(build_graph(3, [(0, 2, 5), (1, 2, -1)]))
    res = finish(fg, {0: 0, 1: 10}, 1)
    assert res.dist == [0, 10, 5]
    res = finish(fg, {0: 0, 1: 1}, 1)
    assert res.dist == [0, 1, 0]


def test_source_out_of_range():
    with pytest.raises(PreconditionError):
        hop_sssp(freeze(build_graph(2, [])), 5, 1)
