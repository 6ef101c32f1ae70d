import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from zagreb.graph import (
    Graph,
    GraphError,
    Regularity,
    RegularityClass,
    build_graph,
    circulant_regular,
    classify_regularity,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    degree_sequence,
    degree_set,
    disjoint_union,
    edge_class_counts,
    induced_subgraph,
    is_connected,
    path,
    star,
    subdivision,
)


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_generator_sizes():
    assert (complete(5).n, complete(5).m) == (5, 10)
    assert (cycle(7).n, cycle(7).m) == (7, 7)
    assert (path(4).n, path(4).m) == (4, 3)
    assert (complete_bipartite(3, 6).n, complete_bipartite(3, 6).m) == (9, 18)
    assert star(4).degree(0) == 4
    for bad in (lambda: cycle(2), lambda: complete(0), lambda: star(0), lambda: complete_bipartite(0, 3)):
        with pytest.raises(GraphError):
            bad()


@pytest.mark.parametrize("r,n", [(2, 5), (3, 6), (4, 7), (4, 9), (5, 8), (0, 3)])
def test_circulant_is_regular(r, n):
    g = circulant_regular(r, n)
    assert set(g.degrees()) == {r}


def test_circulant_odd_needs_even_n():
    with pytest.raises(GraphError):
        circulant_regular(3, 7)


def test_union_k5_k36():
    g = disjoint_union(complete(5), complete_bipartite(3, 6))
    assert (g.n, g.m) == (14, 28)
    assert len(connected_components(g)) == 2
    assert not is_connected(g)


def test_subdivision_of_k4():
    g = subdivision(complete(4))
    assert (g.n, g.m) == (10, 12)
    assert classify_regularity(g) == RegularityClass(Regularity.BIREGULAR_CLASS1, (2, 3))


def test_regularity_examples():
    assert str(classify_regularity(path(4))) == "BiregularClass2(1,2)"
    # K_{1,3} with one edge subdivided: degrees 1, 2, 3 and no equal-degree edge
    spider = build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert str(classify_regularity(spider)) == "TriregularClass1(1,2,3)"
    assert classify_regularity(cycle(5)).kind is Regularity.REGULAR
    assert classify_regularity(complete_bipartite(3, 4)).is_class1
    assert classify_regularity(build_graph(3, [])).kind is Regularity.REGULAR
    tri2 = build_graph(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert classify_regularity(tri2).kind is Regularity.TRIREGULAR_CLASS2


def test_regularity_parse_round_trip():
    for text in ("Regular(3)", "BiregularClass1(2,3)", "Other(2,3,5,6)"):
        assert str(RegularityClass.parse(text)) == text


def test_induced_subgraph():
    g = induced_subgraph(complete(5), [4, 2, 0])
    assert (g.n, g.m) == (3, 3)


@given(graphs(min_n=1, max_n=14, no_isolated=False))
def test_handshake_and_oracle(g: Graph):
    h = to_nx(g)
    assert sum(g.degrees()) == 2 * g.m
    assert g.m == h.number_of_edges()
    assert degree_sequence(g) == sorted(d for _, d in h.degree())
    assert degree_set(g) == sorted({d for _, d in h.degree()})
    assert is_connected(g) == nx.is_connected(h)
    assert len(connected_components(g)) == nx.number_connected_components(h)


@given(graphs(max_n=12))
def test_edge_classes_partition_edges(g: Graph):
    counts = edge_class_counts(g)
    assert sum(counts.values()) == g.m
    assert all(i <= j for i, j in counts)
