import pytest

from cfconn.families import (
    all_connected_graphs,
    all_trees,
    complete_graph,
    cycle_graph,
    generate_family,
    gnp,
    gnp_connected,
    path_graph,
    random_tree,
    star_graph,
)
from cfconn.graph import GraphError, is_connected


def test_basic_families():
    assert path_graph(4).edges == ((0, 1), (1, 2), (2, 3))
    assert cycle_graph(3).m == 3
    assert star_graph(5).degree(0) == 5
    assert complete_graph(5).m == 10
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_random_tree_is_tree_and_deterministic():
    for seed in range(10):
        t = random_tree(8, seed)
        assert t.m == 7 and is_connected(t)
    assert random_tree(8, 3).edges == random_tree(8, 3).edges


def test_gnp_deterministic_and_connected_variant():
    assert gnp(10, 0.4, 7).edges == gnp(10, 0.4, 7).edges
    g = gnp_connected(9, 0.3, 0)
    assert is_connected(g)


def test_all_connected_graph_counts():
    # labeled connected graphs: 1, 4, 38, 728 for n = 2..5
    assert sum(1 for _ in all_connected_graphs(2)) == 1
    assert sum(1 for _ in all_connected_graphs(3)) == 4
    assert sum(1 for _ in all_connected_graphs(4)) == 38
    assert sum(1 for _ in all_connected_graphs(5)) == 728
    with pytest.raises(GraphError):
        next(all_connected_graphs(8))


def test_all_trees_counts():
    # nonisomorphic trees: 1, 1, 2, 3, 6, 11 for n = 2..7
    for n, count in [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11)]:
        trees = list(all_trees(n))
        assert len(trees) == count
        assert all(t.m == n - 1 and is_connected(t) for t in trees)


def test_generate_family_dispatch():
    assert next(generate_family("path", n=5)).m == 4
    assert len(list(generate_family("random_tree", n=6, count=3, seed=1))) == 3
    assert len(list(generate_family("gnp", n=5, p=0.5, count=2, seed=0))) == 2
    with pytest.raises(GraphError):
        next(generate_family("moebius", n=5))
