"""Exact invariants: components, distances, girth, bipartite/star tests,
cliques, and the Z_2p neighborhood clauses."""

import itertools

import pytest

import wnc

from corpus import ACCEPTANCE_CORPUS, SMALL_CORPUS, realize
from oracles import (cycle_is_valid, exists_clique_of_size, floyd_diameter,
                     floyd_distances, has_square, has_triangle, is_clique)


def _component_sizes(graph):
    return sorted(c.bit_count() for c in wnc.components(graph))


def test_component_examples():
    assert _component_sizes(realize("GF(25)")[2]) == [5, 10, 10]
    assert _component_sizes(realize("Z10")[2]) == [10]
    assert _component_sizes(realize("GF(9)")[2]) == [3, 6]


def test_components_partition_the_carrier():
    for expr in ("GF(25)", "GF(27)", "Z30"):
        _, _, graph = realize(expr)
        comps = wnc.components(graph)
        union = 0
        for c in comps:
            assert union & c == 0
            union |= c
        assert union == (1 << graph.vertex_count) - 1


def test_diameter_examples():
    assert wnc.diameter(realize("Z5")[2]) == 2
    assert wnc.diameter(realize("Z7")[2]) == 3
    assert wnc.diameter(realize("Z12")[2]) == 1
    assert wnc.diameter(realize("GF(25)")[2]) is wnc.INFINITE
    assert wnc.diameter(realize("Z3 x Z3")[2]) == 2  # within the {2,3} range


@pytest.mark.parametrize("expr", ACCEPTANCE_CORPUS)
def test_diameter_agrees_with_floyd(expr):
    _, _, graph = realize(expr)
    assert graph.vertex_count <= 64
    expected = floyd_diameter(graph)
    got = wnc.diameter(graph)
    if expected is None:
        assert got is wnc.INFINITE
    else:
        assert got == expected


def test_bfs_distances_match_floyd_rowwise():
    for expr in ("Z10", "GF(9)", "Z3 x Z3", "M2(Z2)"):
        _, _, graph = realize(expr)
        fd = floyd_distances(graph)
        for src in range(graph.vertex_count):
            bfs = wnc.bfs_distances(graph, src)
            for v in range(graph.vertex_count):
                expected = fd[src][v]
                assert bfs[v] == (-1 if expected == float("inf") else expected)


def test_infinite_iff_disconnected():
    for expr in ACCEPTANCE_CORPUS:
        _, _, graph = realize(expr)
        disconnected = len(wnc.components(graph)) > 1
        assert (wnc.diameter(graph) is wnc.INFINITE) == disconnected


def test_girth_examples():
    _, _, g10 = realize("Z10")
    assert wnc.girth(g10) == 3
    cycle = wnc.shortest_cycle(g10)
    assert len(cycle) == 3 and cycle_is_valid(g10, cycle)
    assert wnc.girth(realize("GF(4)")[2]) is wnc.INFINITE
    assert wnc.girth(realize("Z2")[2]) is wnc.INFINITE  # K_2 is acyclic


@pytest.mark.parametrize("expr", ACCEPTANCE_CORPUS)
def test_girth_witness_and_minimality(expr):
    _, _, graph = realize(expr)
    g = wnc.girth(graph)
    cycle = wnc.shortest_cycle(graph)
    if g is wnc.INFINITE:
        assert cycle is None
        assert not has_triangle(graph) and not has_square(graph)
        return
    assert cycle_is_valid(graph, cycle) and len(cycle) == g
    if g == 4:
        assert not has_triangle(graph)
    if g > 4:
        assert not has_triangle(graph) and not has_square(graph)


def test_girth_on_synthetic_cycles():
    for n in (4, 5, 6, 9):
        ring_cycle = wnc.make_graph([(i, (i + 1) % n) for i in range(n)], n)
        assert wnc.girth(ring_cycle) == n
        assert cycle_is_valid(ring_cycle, wnc.shortest_cycle(ring_cycle))
    path = wnc.make_graph([(0, 1), (1, 2), (2, 3)], 4)
    assert wnc.girth(path) is wnc.INFINITE


def test_bipartite_examples():
    ok, payload = wnc.is_bipartite(realize("Z10")[2])
    assert not ok
    graph = realize("Z10")[2]
    assert cycle_is_valid(graph, payload) and len(payload) % 2 == 1
    ok, coloring = wnc.is_bipartite(realize("GF(4)")[2])
    assert ok
    g4 = realize("GF(4)")[2]
    for u, v in wnc.edges(g4):
        assert coloring[u] != coloring[v]
    ok, _ = wnc.is_bipartite(realize("Z2")[2])
    assert ok


def test_star_recognition():
    assert not wnc.is_star(realize("Z10")[2])
    assert wnc.is_star(realize("Z2")[2])  # K_2 = K_{1,1}
    assert wnc.is_star(wnc.make_graph([(0, 1), (0, 2)], 3))  # path = K_{1,2}
    assert not wnc.is_star(wnc.make_graph([(0, 1), (1, 2), (2, 0)], 3))  # K_3
    assert not wnc.is_star(wnc.make_graph([(0, 1), (1, 2), (2, 3)], 4))
    assert wnc.is_star(wnc.make_graph([(3, 0), (3, 1), (3, 2)], 4))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_clique_number_zp_is_three(p):
    _, _, graph = realize(f"Z{p}")
    clique, omega = wnc.max_clique(graph)
    assert omega == 3 and is_clique(graph, clique)


@pytest.mark.parametrize("q", [9, 25, 27, 49])
def test_clique_number_odd_char_fields_is_three(q):
    _, _, graph = realize(f"GF({q})")
    _, omega = wnc.max_clique(graph)
    assert omega == 3


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_clique_number_z2p_is_four(p):
    _, _, graph = realize(f"Z{2 * p}")
    clique, omega = wnc.max_clique(graph)
    assert omega == 4 and is_clique(graph, clique)


@pytest.mark.parametrize("expr", SMALL_CORPUS)
def test_clique_number_against_exhaustive_subsets(expr):
    _, _, graph = realize(expr)
    clique, omega = wnc.max_clique(graph)
    assert is_clique(graph, clique) and len(clique) == omega
    assert not exists_clique_of_size(graph, omega + 1)


def test_max_clique_returns_lexicographically_least():
    _, _, graph = realize("Z10")
    clique, omega = wnc.max_clique(graph)
    assert omega == 4
    all_max = [c for c in itertools.combinations(range(10), 4)
               if is_clique(graph, c)]
    assert clique == min(all_max)


def test_four_clique_census_z10():
    _, _, graph = realize("Z10")
    assert wnc.enumerate_k_cliques(graph, 4) == [
        (0, 1, 4, 5), (0, 1, 5, 9), (0, 4, 5, 6), (0, 5, 6, 9), (2, 3, 7, 8)]
    assert wnc.enumerate_k_cliques(graph, 5) == []


def test_enumerate_k_cliques_edge_cases():
    _, _, graph = realize("Z10")
    assert wnc.enumerate_k_cliques(graph, 1) == [(v,) for v in range(10)]
    with pytest.raises(ValueError):
        wnc.enumerate_k_cliques(graph, 0)
    assert wnc.enumerate_k_cliques(graph, 2) == list(wnc.edges(graph))


@pytest.mark.parametrize("expr,count", [("Z14", 5), ("Z22", 5), ("Z26", 5)])
def test_four_clique_census_other_z2p(expr, count):
    _, _, graph = realize(expr)
    cliques = wnc.enumerate_k_cliques(graph, 4)
    assert len(cliques) == count
    for c in cliques:
        assert is_clique(graph, c)


def test_neighborhood_lemma_sweeps():
    for expr in ("Z10", "Z14"):
        ring, _, graph = realize(expr)
        verdicts = wnc.neighborhood_disjointness_check(ring, graph)
        assert all(ok for _, _, _, ok in verdicts), expr
    # Z_14 has substantive pairs; the (13, 2) pair realizes a + b = 1 at a = -1
    ring14, _, g14 = realize("Z14")
    verdicts = wnc.neighborhood_disjointness_check(ring14, g14)
    assert (2, 13, 2, True) in verdicts
    assert any(clause == 1 for clause, *_ in verdicts)
    assert any(clause == 3 for clause, *_ in verdicts)


def test_neighborhood_lemma_rejects_wrong_shape():
    for expr in ("Z12", "Z9", "GF(25)", "Z6"):
        ring, _, graph = realize(expr)
        with pytest.raises(ValueError):
            wnc.neighborhood_disjointness_check(ring, graph)
