import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfconn.coloring import (
    EdgeColoring,
    PairSet,
    VertexColoring,
    canonical_edge_colorings,
    canonical_vertex_colorings,
    rainbow_edge_coloring,
)
from cfconn.families import all_connected_graphs, complete_graph, cycle_graph, gnp_connected, path_graph
from cfconn.graph import GraphError, build_graph
from cfconn.oracles import oracle_cfc_edge, oracle_cfc_vertex, oracle_scfc, oracle_scfc_subset
from cfconn.verify import verify_cfc_edge, verify_cfc_vertex, verify_scfc, verify_scfc_subset


def test_verify_cfc_edge_path_examples():
    g = path_graph(4)
    assert verify_cfc_edge(g, EdgeColoring((1, 2, 1), 2)).ok
    rep = verify_cfc_edge(g, EdgeColoring((1, 1, 1), 1))
    assert not rep.ok
    # lexicographically first failing pair
    assert rep.witness_pair == (0, 2)


def test_verify_report_invariants():
    g = path_graph(3)
    rep = verify_cfc_edge(g, EdgeColoring((1, 2), 2))
    assert rep.ok and rep.witness_pair is None


def test_verify_requires_connected():
    g = build_graph(3, [(0, 1)])
    with pytest.raises(GraphError):
        verify_cfc_edge(g, EdgeColoring((1,), 1))
    with pytest.raises(GraphError):
        verify_scfc(g, EdgeColoring((1,), 1))


def test_verify_cfc_vertex_examples():
    g = path_graph(3)
    assert verify_cfc_vertex(g, VertexColoring((1, 2, 1), 2)).ok
    assert not verify_cfc_vertex(path_graph(4), VertexColoring((1, 1, 1, 1), 1)).ok


def test_verify_scfc_examples():
    c5 = cycle_graph(5)
    assert not verify_scfc(c5, EdgeColoring((1,) * 5, 1)).ok
    assert verify_scfc(c5, EdgeColoring((1, 2, 3, 1, 2), 3)).ok
    assert verify_scfc(complete_graph(4), EdgeColoring((1,) * 6, 1)).ok


def test_verify_scfc_subset_disconnected_and_empty():
    g = build_graph(4, [(0, 1), (2, 3)])
    c = EdgeColoring((1, 2), 2)
    assert verify_scfc_subset(g, c, PairSet([], 4)).ok
    assert verify_scfc_subset(g, c, PairSet([(0, 1)], 4)).ok
    rep = verify_scfc_subset(g, c, PairSet([(0, 2)], 4))
    assert not rep.ok and rep.witness_pair == (0, 2)
    with pytest.raises(GraphError):
        verify_scfc_subset(g, c, PairSet([(0, 9)]))


def test_audit_details_cover_all_pairs():
    g = cycle_graph(4)
    c = EdgeColoring((1, 2, 1, 2), 2)
    rep = verify_cfc_edge(g, c, audit=True)
    if rep.ok:
        assert len(rep.witness_detail) == len(g.vertex_pairs())


def test_exhaustive_oracle_agreement_small():
    for n in range(2, 5):
        for g in all_connected_graphs(n):
            for c in canonical_edge_colorings(g, 3):
                assert verify_cfc_edge(g, c).ok == oracle_cfc_edge(g, c)
                assert verify_scfc(g, c).ok == oracle_scfc(g, c)
            for vc in canonical_vertex_colorings(g, 3):
                assert verify_cfc_vertex(g, vc).ok == oracle_cfc_vertex(g, vc)


@st.composite
def graph_and_edge_coloring(draw):
    seed = draw(st.integers(0, 10_000))
    n = draw(st.integers(4, 7))
    g = gnp_connected(n, draw(st.floats(0.3, 0.8)), seed)
    k = draw(st.integers(1, 4))
    colors = tuple(draw(st.integers(1, k)) for _ in range(g.m))
    return g, EdgeColoring(colors, k)


@settings(max_examples=60, deadline=None)
@given(graph_and_edge_coloring())
def test_property_oracle_agreement(gc):
    g, c = gc
    assert verify_cfc_edge(g, c).ok == oracle_cfc_edge(g, c)
    assert verify_scfc(g, c).ok == oracle_scfc(g, c)


@settings(max_examples=40, deadline=None)
@given(graph_and_edge_coloring(), st.randoms(use_true_random=False))
def test_property_color_relabeling_invariance(gc, rnd):
    g, c = gc
    perm = list(range(1, c.k + 1))
    rnd.shuffle(perm)
    relabeled = EdgeColoring(tuple(perm[x - 1] for x in c.colors), c.k)
    assert verify_cfc_edge(g, c).ok == verify_cfc_edge(g, relabeled).ok
    assert verify_scfc(g, c).ok == verify_scfc(g, relabeled).ok


@settings(max_examples=40, deadline=None)
@given(graph_and_edge_coloring())
def test_property_scfc_implies_cfc(gc):
    g, c = gc
    if verify_scfc(g, c).ok:
        assert verify_cfc_edge(g, c).ok


@settings(max_examples=40, deadline=None)
@given(graph_and_edge_coloring())
def test_property_subset_consistency(gc):
    g, c = gc
    full = verify_scfc(g, c).ok
    assert verify_scfc_subset(g, c, PairSet.all_pairs(g)).ok == full
    # every single-pair restriction agrees with the per-pair oracle
    for u, v in itertools.islice(g.vertex_pairs(), 5):
        p = PairSet([(u, v)], g.n)
        assert verify_scfc_subset(g, c, p).ok == oracle_scfc_subset(g, c, p)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(4, 7), st.floats(0.3, 0.8))
def test_property_rainbow_coloring_always_passes(seed, n, p):
    g = gnp_connected(n, p, seed)
    r = rainbow_edge_coloring(g)
    assert verify_cfc_edge(g, r).ok
    assert verify_scfc(g, r).ok
