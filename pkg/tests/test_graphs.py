import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from domsat import (
    Graph,
    bridges,
    complete_bipartite,
    complete_graph,
    component_graphs,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    is_acyclic,
    is_connected,
    is_k_connected,
    is_k_edge_connected,
    join,
    path_graph,
    star_graph,
    structural_queries,
)
from domsat.graphs import (
    _edge_flow_at_least,
    _k_connected_brute,
    _k_connected_flow,
    _k_edge_connected_brute,
)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # bit only in the lower-indexed row
    with pytest.raises(ValueError):
        Graph(2, (0, 1))  # bit only in the higher-indexed row
    with pytest.raises(ValueError):
        Graph(1, (1,))  # self-loop
    with pytest.raises(ValueError):
        from_edges(2, [(0, 0)])


def test_basic_queries():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count == 3
    assert g.degrees() == (1, 2, 2, 1)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.non_edges() == [(0, 2), (0, 3), (1, 3)]
    assert g.has_edge(1, 2) and not g.has_edge(0, 2)
    assert g.add_edge(0, 2).edge_count == 4
    assert g.remove_edge(1, 2).edge_count == 2
    with pytest.raises(ValueError):
        g.add_edge(0, 1)
    with pytest.raises(ValueError):
        g.remove_edge(0, 2)


def test_join_examples():
    assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)
    assert join(complete_graph(2), complete_graph(2)) == complete_graph(4)
    d53 = join(complete_graph(1), disjoint_union([complete_graph(2)] * 2))
    assert d53.n == 5 and d53.edge_count == 6


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=60, deadline=None)
def test_join_edge_count_identity(g, h):
    assert join(g, h).edge_count == g.edge_count + h.edge_count + g.n * h.n


def test_disjoint_union():
    two_p3 = disjoint_union([path_graph(3), path_graph(3)])
    assert two_p3.n == 6 and two_p3.edge_count == 4
    assert len(components(two_p3)) == 2
    assert disjoint_union([complete_graph(2)]) == complete_graph(2)
    m7 = disjoint_union([complete_graph(3), complete_graph(2), complete_graph(2)])
    assert m7.n == 7 and m7.edge_count == 5


def test_components_and_acyclicity():
    g = disjoint_union([cycle_graph(3), path_graph(2), empty_graph(1)])
    assert [m.bit_count() for m in components(g)] == [3, 2, 1]
    assert not is_acyclic(g)
    assert is_acyclic(disjoint_union([path_graph(4), path_graph(3)]))
    assert [c.n for c in component_graphs(g)] == [3, 2, 1]


def test_bridges_examples():
    assert bridges(path_graph(4)) == [(0, 1), (1, 2), (2, 3)]
    assert bridges(cycle_graph(5)) == []
    assert len(bridges(star_graph(4))) == 4
    # bridge endpoints are separated once the bridge goes
    g = from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert bridges(g) == []
    g2 = g.add_edge(1, 3)  # still 2-edge-connected
    assert bridges(g2) == []


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=80, deadline=None)
def test_bridges_match_naive_removal(g):
    naive = [
        e
        for e in g.edges()
        if len(components(g.remove_edge(*e))) > len(components(g))
    ]
    assert bridges(g) == naive


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=60, deadline=None)
def test_bridge_separates_endpoints(g):
    for u, v in bridges(g):
        cut = g.remove_edge(u, v)
        comp_of_u = next(m for m in components(cut) if m >> u & 1)
        assert not comp_of_u >> v & 1


def test_k_connected_examples():
    assert is_k_connected(cycle_graph(5), 2)
    assert not is_k_connected(path_graph(4), 2)
    assert is_k_connected(complete_graph(4), 3)
    assert not is_k_connected(complete_graph(4), 4)
    assert is_k_connected(empty_graph(1), 0)
    assert not is_k_connected(empty_graph(1), 1)
    with pytest.raises(ValueError):
        is_k_connected(complete_graph(3), -1)


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=60, deadline=None)
def test_one_connected_iff_connected(g):
    assert is_k_connected(g, 1) == (is_connected(g) and g.n >= 2)


def test_k_edge_connected_examples():
    assert is_k_edge_connected(cycle_graph(6), 2)
    assert not is_k_edge_connected(disjoint_union([complete_graph(3)] * 2), 1)
    assert is_k_edge_connected(complete_graph(4).remove_edge(0, 1), 2)
    # a lone vertex cannot be disconnected by removing edges
    assert is_k_edge_connected(empty_graph(1), 7)


@given(graphs(min_n=2, max_n=8), st.integers(0, 8))
@settings(max_examples=80, deadline=None)
def test_connectivity_brute_matches_flow(g, k):
    if k == 0:
        return
    brute = g.n > k and _k_connected_brute(g, k)
    flow = g.n > k and _k_connected_flow(g, k)
    assert brute == flow
    brute_e = _k_edge_connected_brute(g, k)
    flow_e = is_connected(g) and all(
        _edge_flow_at_least(g, 0, v, k) for v in range(1, g.n)
    )
    assert brute_e == flow_e


def test_structural_queries():
    s = structural_queries(path_graph(4))
    assert s.min_degree == 1
    assert s.bridges == ((0, 1), (1, 2), (2, 3))
    assert s.acyclic
    s = structural_queries(cycle_graph(5))
    assert s.min_degree == 2 and s.bridges == () and not s.acyclic
    s = structural_queries(star_graph(4))
    assert s.degree_sequence == (4, 1, 1, 1, 1)
    assert len(s.bridges) == 4


def test_relabel_and_subgraph():
    g = path_graph(4)
    assert g.relabel([3, 2, 1, 0]) == g
    h = g.relabel([1, 0, 2, 3])
    assert h.edges() == [(0, 1), (0, 2), (2, 3)]
    sub = g.subgraph(0b1011)  # vertices 0, 1, 3
    assert sub.n == 3 and sub.edges() == [(0, 1)]
    assert complete_bipartite(2, 3).degrees() == (3, 3, 2, 2, 2)
