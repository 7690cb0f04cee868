from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graphs, graphs_with_permutation
from degencrit import families as fam
from degencrit.graph import (
    Edge,
    Graph,
    GraphError,
    add_edge,
    complement,
    complete_join,
    components,
    cut_vertices,
    degree_profile,
    delete_edge,
    delete_vertices,
    disjoint_union,
    from_edge_list,
    has_clique,
    induced_subgraph,
    is_complete,
    is_connected,
    is_independent,
    is_regular,
    is_two_connected,
    relabel,
    square,
)
from oracles import connected, edge_set


def test_rejects_malformed_adjacency():
    with pytest.raises(GraphError):
        Graph(2, [[1], []])  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, [[0]])
    with pytest.raises(GraphError):
        Graph(2, [[5], []])
    with pytest.raises(GraphError):
        Graph(3, [[], []])
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(1, 1)])


def test_edges_are_lexicographic_and_deduplicated():
    G = from_edge_list(4, [(3, 1), (0, 2), (2, 0), (1, 0)])
    assert G.edges() == [Edge(0, 1), Edge(0, 2), Edge(1, 3)]
    assert G.m == 3
    assert str(Edge.of(3, 1)) == "1-3"


def test_equality_is_labelled():
    assert from_edge_list(3, [(0, 1)]) == from_edge_list(3, [(1, 0)])
    assert from_edge_list(3, [(0, 1)]) != from_edge_list(3, [(1, 2)])
    assert len({from_edge_list(3, [(0, 1)]), from_edge_list(3, [(1, 0)])}) == 1


def test_delete_and_add_edge():
    G = fam.cycle(5)
    H = delete_edge(G, 0, 4)
    assert H.m == 4 and not H.has_edge(0, 4)
    assert add_edge(H, 4, 0) == G
    with pytest.raises(GraphError):
        delete_edge(H, 0, 4)


def test_induced_subgraph_relabels_in_sorted_order():
    G = fam.path(5)
    H = induced_subgraph(G, [4, 2, 3])
    assert H.edges() == [Edge(0, 1), Edge(1, 2)]
    assert delete_vertices(G, [0, 4]) == fam.path(3)
    with pytest.raises(GraphError):
        induced_subgraph(G, [7])


def test_join_and_union_shapes():
    J = complete_join(fam.cycle(4), fam.edgeless(2))
    assert J.n == 6 and J.m == 4 + 8
    assert all(J.has_edge(u, v) for u in range(4) for v in (4, 5))
    U = disjoint_union(fam.complete(3), fam.complete(2))
    assert components(U) == [[0, 1, 2], [3, 4]]


def test_square_of_cycle():
    assert square(fam.cycle(6)).m == 12
    assert square(fam.cycle(5)) == fam.complete(5)
    assert square(fam.path(3)) == fam.complete(3)


def test_degree_profile():
    seq, lo, hi = degree_profile(fam.wheel(5))
    assert seq == [3, 3, 3, 3, 3, 5] and lo == 3 and hi == 5
    with pytest.raises(GraphError):
        degree_profile(Graph(0, []))


def test_connectivity_conventions():
    assert is_connected(Graph(0, []))
    assert is_connected(fam.complete(1))
    assert not is_connected(fam.edgeless(2))
    assert not is_two_connected(fam.complete(2))
    assert is_two_connected(fam.cycle(3))
    assert cut_vertices(fam.path(4)) == [1, 2]
    assert cut_vertices(fam.star(3)) == [0]


def test_predicates():
    assert is_complete(fam.complete(4)) and not is_complete(fam.cycle(4))
    assert is_regular(fam.cycle(7)) and not is_regular(fam.path(3))
    assert is_independent(fam.cycle(6), [0, 2, 4])
    assert not is_independent(fam.cycle(6), [0, 1])
    assert has_clique(fam.complete(4), 4) and not has_clique(fam.cycle_square(6), 4)


@given(graphs(max_n=8))
def test_complement_is_an_involution(G):
    C = complement(G)
    assert C.m + G.m == G.n * (G.n - 1) // 2
    assert complement(C) == G


@given(graphs_with_permutation(max_n=8))
def test_relabel_preserves_structure(case):
    G, perm = case
    H = relabel(G, perm)
    assert sorted(G.degrees()) == sorted(H.degrees())
    assert {frozenset((perm[e.u], perm[e.v])) for e in G.edges()} == edge_set(H)


@given(graphs(max_n=8))
def test_connectivity_matches_search(G):
    assert is_connected(G) == connected(G.n, [tuple(e) for e in G.edges()])
    assert sum(len(c) for c in components(G)) == G.n


@given(graphs(max_n=8))
def test_cut_vertices_by_definition(G):
    base = len(components(G))
    expected = [v for v in range(G.n) if len(components(delete_vertices(G, [v]))) > base]
    assert cut_vertices(G) == expected


@given(graphs(max_n=7))
def test_has_clique_by_definition(G):
    for k in range(1, 5):
        expected = any(
            all(G.has_edge(u, v) for u, v in combinations(S, 2)) for S in combinations(range(G.n), k)
        )
        assert has_clique(G, k) == expected


@settings(max_examples=50)
@given(graphs(max_n=6), graphs(max_n=6))
def test_join_degrees(G1, G2):
    J = complete_join(G1, G2)
    assert J.m == G1.m + G2.m + G1.n * G2.n
    assert J.degrees() == [d + G2.n for d in G1.degrees()] + [d + G1.n for d in G2.degrees()]
