from itertools import combinations, permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from domsat import (
    are_isomorphic,
    automorphism_order,
    canonical_form,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edges,
    path_graph,
    star_graph,
)


def test_relabeling_invariance_examples():
    p3_a = from_edges(3, [(0, 1), (1, 2)])
    p3_b = from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(p3_a) == canonical_form(p3_b)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_relabeling_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_idempotence_and_isomorphy(g):
    c = canonical_form(g)
    assert canonical_form(c) == c
    assert c.n == g.n and c.edge_count == g.edge_count
    assert sorted(c.degrees()) == sorted(g.degrees())


def test_three_classes_of_three_edge_graphs():
    forms = set()
    for chosen in combinations([(u, v) for u in range(4) for v in range(u + 1, 4)], 3):
        forms.add(canonical_form(from_edges(4, chosen)))
    assert len(forms) == 3


def test_highly_symmetric_inputs_complete_quickly():
    big = complete_graph(16)
    assert canonical_form(big) == big
    assert canonical_form(complete_bipartite(6, 6)).edge_count == 36
    blocks = disjoint_union([complete_graph(4)] * 4)
    assert canonical_form(blocks).edge_count == 24


def _brute_aut(g):
    return sum(1 for p in permutations(range(g.n)) if g.relabel(p) == g)


def test_automorphism_orders_named():
    assert automorphism_order(complete_graph(4)) == 24
    assert automorphism_order(cycle_graph(5)) == 10
    assert automorphism_order(cycle_graph(6)) == 12
    assert automorphism_order(path_graph(4)) == 2
    assert automorphism_order(star_graph(4)) == 24
    assert automorphism_order(complete_bipartite(3, 3)) == 72
    assert automorphism_order(disjoint_union([complete_graph(3)] * 2)) == 72


@given(graphs(max_n=6))
@settings(max_examples=60, deadline=None)
def test_automorphism_order_matches_brute_force(g):
    assert automorphism_order(g) == _brute_aut(g)


def test_are_isomorphic():
    assert are_isomorphic(path_graph(3), star_graph(2))
    assert not are_isomorphic(path_graph(4), star_graph(3))
    assert not are_isomorphic(path_graph(3), path_graph(4))
