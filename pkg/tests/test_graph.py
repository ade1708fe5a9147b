import pytest

from cfconn.graph import (
    HORIZONTAL,
    UNREACHABLE,
    VERTICAL,
    GraphError,
    bfs_distances,
    build_graph,
    classify_edge,
    cut_vertices_and_blocks,
    dfs_component,
    diameter,
    is_connected,
    is_two_connected,
    is_two_edge_connected,
)
from cfconn.families import complete_graph, cycle_graph, path_graph, star_graph


def test_build_graph_normalizes_and_indexes():
    g = build_graph(4, [(1, 0), (1, 2), (3, 2)])
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.edge_index(2, 1) == 1
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.degree(1) == 2


@pytest.mark.parametrize(
    "n,edges",
    [
        (3, [(0, 0)]),
        (3, [(0, 1), (1, 0)]),
        (3, [(0, 3)]),
        (0, []),
        (2, [(-1, 0)]),
    ],
)
def test_build_graph_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_bfs_distances_path():
    g = path_graph(5)
    assert bfs_distances(g, 0).dist == (0, 1, 2, 3, 4)
    assert bfs_distances(g, 2).dist == (2, 1, 0, 1, 2)


def test_bfs_distances_with_removed_edges():
    g = cycle_graph(4)
    e = g.edge_index(0, 3)
    assert bfs_distances(g, 0, removed_edges=[e]).dist == (0, 1, 2, 3)


def test_bfs_unreachable_sentinel():
    g = build_graph(3, [(0, 1)])
    assert bfs_distances(g, 0).dist[2] == UNREACHABLE


def test_dfs_component_respects_removals():
    g = path_graph(5)
    assert dfs_component(g, 0) == {0, 1, 2, 3, 4}
    assert dfs_component(g, 0, removed_vertices=[2]) == {0, 1}
    assert dfs_component(g, 4, removed_edges=[g.edge_index(1, 2)]) == {2, 3, 4}
    with pytest.raises(GraphError):
        dfs_component(g, 2, removed_vertices=[2])


def test_is_connected():
    assert is_connected(path_graph(6))
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(build_graph(1, []))


def test_classify_edge():
    g = cycle_graph(4)
    # from 0, edge (1,2) links distance 1 to distance 2
    assert classify_edge(g, 0, g.edge_index(1, 2)) == VERTICAL
    g5 = cycle_graph(5)
    # from 0, edge (2,3) links two vertices at distance 2
    assert classify_edge(g5, 0, g5.edge_index(2, 3)) == HORIZONTAL


def test_cut_vertices_path():
    g = path_graph(5)
    cuts, blocks = cut_vertices_and_blocks(g)
    assert cuts == {1, 2, 3}
    assert sorted(sorted(b) for b in blocks) == [[0], [1], [2], [3]]


def test_cut_vertices_two_triangles():
    # two triangles sharing vertex 2
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    cuts, blocks = cut_vertices_and_blocks(g)
    assert cuts == {2}
    assert len(blocks) == 2
    assert all(len(b) == 3 for b in blocks)


def test_two_connected_and_two_edge_connected():
    assert is_two_connected(cycle_graph(4))
    assert not is_two_connected(path_graph(4))
    assert not is_two_connected(build_graph(2, [(0, 1)]))
    assert is_two_edge_connected(cycle_graph(3))
    assert not is_two_edge_connected(path_graph(3))
    # bowtie: 2-edge-connected but not 2-connected
    bowtie = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert is_two_edge_connected(bowtie)
    assert not is_two_connected(bowtie)


def test_diameter():
    assert diameter(path_graph(6)) == 5
    assert diameter(complete_graph(5)) == 1
    assert diameter(star_graph(4)) == 2
    with pytest.raises(GraphError):
        diameter(build_graph(3, [(0, 1)]))
