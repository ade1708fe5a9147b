import pytest

from cfconn.coloring import (
    EdgeColoring,
    PairSet,
    VertexColoring,
    canonical_colorings,
    canonical_edge_colorings,
    check_edge_coloring,
    rainbow_edge_coloring,
)
from cfconn.families import path_graph
from cfconn.graph import GraphError


def test_coloring_validation():
    EdgeColoring(colors=(1, 2, 1), k=2)
    with pytest.raises(GraphError):
        EdgeColoring(colors=(1, 3), k=2)
    with pytest.raises(GraphError):
        EdgeColoring(colors=(0, 1), k=2)
    with pytest.raises(GraphError):
        VertexColoring(colors=(), k=0)


def test_color_classes_and_used():
    c = EdgeColoring(colors=(1, 2, 1, 3), k=4)
    assert c.color_classes() == {1: [0, 2], 2: [1], 3: [3]}
    assert c.used() == 3


def test_check_edge_coloring_length():
    g = path_graph(4)
    check_edge_coloring(g, EdgeColoring(colors=(1, 1, 1), k=1))
    with pytest.raises(GraphError):
        check_edge_coloring(g, EdgeColoring(colors=(1, 1), k=1))


def test_pair_set_normalization():
    p = PairSet([(3, 1), (1, 3), (0, 2)], n=4)
    assert p.pairs == ((0, 2), (1, 3))
    assert (3, 1) in p and (0, 1) not in p
    assert len(p) == 2
    with pytest.raises(GraphError):
        PairSet([(1, 1)], n=3)
    with pytest.raises(GraphError):
        PairSet([(0, 5)], n=3)


def test_all_pairs():
    g = path_graph(3)
    assert PairSet.all_pairs(g).pairs == ((0, 1), (0, 2), (1, 2))


def test_canonical_colorings_counts_and_shape():
    # canonical tuples = set partitions into at most k ordered-first-use blocks
    assert list(canonical_colorings(1, 3)) == [(1,)]
    three_two = list(canonical_colorings(3, 2))
    assert three_two == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]
    assert len(list(canonical_colorings(4, 4))) == 15  # Bell(4)
    # every tuple is first-use canonical
    for t in canonical_colorings(5, 3):
        seen_max = 0
        for c in t:
            assert c <= seen_max + 1
            seen_max = max(seen_max, c)


def test_canonical_edge_colorings_and_rainbow():
    g = path_graph(4)
    assert sum(1 for _ in canonical_edge_colorings(g, 3)) == 5  # Bell(3)
    r = rainbow_edge_coloring(g)
    assert r.colors == (1, 2, 3) and r.k == 3
