import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from domsat import (
    PredicateReport,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    is_dom_sat,
    is_dominated,
    is_free,
    is_saturated,
    is_semi_saturated,
    is_weakly_saturated,
    lemma_tree_witness,
    path_graph,
    recheck_certificate,
    run_predicate,
    star_graph,
    tree_witness_ok,
    turan,
)

K3 = complete_graph(3)


def test_edgeless_patterns_rejected():
    for fn in (is_free, is_semi_saturated, is_saturated, is_dominated, is_dom_sat, is_weakly_saturated):
        with pytest.raises(ValueError):
            fn(complete_graph(3), empty_graph(2))


def test_free():
    assert is_free(cycle_graph(4), K3).verdict
    rep = is_free(complete_graph(4), K3)
    assert not rep.verdict and rep.certificate_kind == "embedding"
    assert is_free(turan(6, 2), K3).verdict


def test_semi_saturated():
    assert is_semi_saturated(complete_graph(5), complete_graph(4)).verdict
    assert is_semi_saturated(star_graph(4), K3).verdict
    rep = is_semi_saturated(disjoint_union([K3, K3]), cycle_graph(6))
    assert not rep.verdict and rep.certificate_kind == "non-edge"
    u, v = rep.certificate
    assert (u < 3) != (v < 3)  # an edge between the two triangles


def test_saturated():
    assert is_saturated(turan(6, 2), K3).verdict
    assert is_saturated(star_graph(4), K3).verdict
    rep = is_saturated(complete_graph(4), K3)
    assert not rep.verdict and rep.certificate_kind == "embedding"


def test_dominated():
    for n in range(3, 7):
        assert is_dominated(complete_graph(n), K3).verdict
    rep = is_dominated(cycle_graph(4), K3)
    assert not rep.verdict and rep.certificate_kind == "uncovered-edge"
    assert is_dominated(complete_graph(4).remove_edge(0, 1), K3).verdict
    # edgeless hosts are vacuously dominated
    assert is_dominated(empty_graph(3), K3).verdict


def test_dom_sat():
    assert is_dom_sat(path_graph(2), complete_graph(2)).verdict
    assert is_dom_sat(complete_graph(4).remove_edge(0, 1), K3).verdict
    rep = is_dom_sat(cycle_graph(5), K3)
    assert not rep.verdict and rep.certificate_kind == "uncovered-edge"


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=60, deadline=None)
def test_single_edge_pattern_is_universal(g):
    k2 = complete_graph(2)
    # every graph is weakly K_2-saturated, and every graph with an edge
    # is K_2-dom-sat
    assert is_weakly_saturated(g, k2).verdict
    assert is_semi_saturated(g, k2).verdict
    if g.edge_count >= 1:
        assert is_dom_sat(g, k2).verdict


def test_weakly_saturated():
    for g in (path_graph(4), cycle_graph(5), empty_graph(3)):
        assert is_weakly_saturated(g, complete_graph(2)).verdict
    rep = is_weakly_saturated(empty_graph(4), K3)
    assert not rep.verdict and rep.certificate_kind == "closure-gap"
    assert len(rep.certificate) == 6
    rep = is_weakly_saturated(star_graph(4), K3)
    assert rep.verdict and rep.certificate_kind == "closure-order"
    assert len(rep.certificate) == 6  # the complement of K_{1,4} within K_5


@given(graphs(min_n=2, max_n=6))
@settings(max_examples=80, deadline=None)
def test_certificates_replay(host):
    for name in ("free", "semi-saturated", "saturated", "dominated", "dom-sat", "weakly-saturated"):
        for pattern in (K3, path_graph(3), star_graph(3)):
            rep = run_predicate(name, host, pattern)
            assert recheck_certificate(rep, host, pattern)


def test_semi_saturation_certificate_blocks_new_copy():
    rep = is_semi_saturated(disjoint_union([K3, K3]), cycle_graph(6))
    assert not rep.verdict
    assert recheck_certificate(rep, disjoint_union([K3, K3]), cycle_graph(6))


def test_report_json_round_trip():
    rep = is_dominated(cycle_graph(4), K3)
    back = PredicateReport.from_json_dict(rep.to_json_dict())
    assert back == rep
    rep = is_weakly_saturated(star_graph(4), K3)
    back = PredicateReport.from_json_dict(rep.to_json_dict())
    assert back == rep


def test_run_predicate_normalizes_names():
    assert run_predicate("dom_sat", complete_graph(2), complete_graph(2)).verdict
    with pytest.raises(ValueError):
        run_predicate("nonsense", K3, K3)


# -- tree witness lemma -------------------------------------------------------


def test_lemma_star_cases():
    assert lemma_tree_witness(star_graph(5), 3) == "star"
    assert lemma_tree_witness(star_graph(2), 2) == "star"  # P_3 is a star


def test_lemma_path_example():
    pair = lemma_tree_witness(path_graph(4), 2)
    assert pair != "star"
    u, v = pair
    assert not path_graph(4).has_edge(u, v)
    assert tree_witness_ok(path_graph(4), 2, u, v)


def test_lemma_rejects_bad_inputs():
    with pytest.raises(ValueError):
        lemma_tree_witness(cycle_graph(4), 3)  # not a tree
    with pytest.raises(ValueError):
        lemma_tree_witness(path_graph(6), 2)  # order not below 3j
    with pytest.raises(ValueError):
        lemma_tree_witness(path_graph(2), 4)  # below the lemma range


def test_lemma_fourteen_vertex_spider():
    # two adjacent centers, three 2-vertex legs each: 14 vertices, j = 5
    edges = [(0, 1)]
    v = 2
    for center in (0, 1):
        for _ in range(3):
            edges += [(center, v), (v, v + 1)]
            v += 2
    spider = from_edges(14, edges)
    pair = lemma_tree_witness(spider, 5)
    assert pair != "star"
    assert tree_witness_ok(spider, 5, *pair)
