"""Deterministic graph-family generators feeding the test and acceptance suites."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, build_graph, reach_mask

MAX_EXHAUSTIVE_N = 7


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n < 2:
        return build_graph(n, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def gnp_connected(n: int, p: float, seed: int) -> Graph:
    """First connected G(n,p) draw along the seed sequence seed, seed+1, ..."""
    s = seed
    while True:
        g = gnp(n, p, s)
        full = (1 << n) - 1
        if reach_mask(g.adj_mask, 0, full) == full:
            return g
        s += 1


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on n vertices exactly once (no isomorphism
    reduction), in edge-subset bitmask order."""
    if n > MAX_EXHAUSTIVE_N:
        raise GraphError(f"exhaustive enumeration capped at n <= {MAX_EXHAUSTIVE_N}")
    if n == 1:
        yield build_graph(1, [])
        return
    all_edges = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for subset in range(1 << len(all_edges)):
        edges = [all_edges[i] for i in range(len(all_edges)) if subset >> i & 1]
        if len(edges) < n - 1:
            continue
        mask = [0] * n
        for u, v in edges:
            mask[u] |= 1 << v
            mask[v] |= 1 << u
        if reach_mask(mask, 0, full) == full:
            yield build_graph(n, edges)


def all_trees(n: int) -> Iterator[Graph]:
    """All trees on n vertices up to isomorphism (via networkx)."""
    if n <= 1:
        yield build_graph(max(n, 1), [])
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    import networkx as nx

    for t in nx.nonisomorphic_trees(n):
        yield build_graph(n, list(t.edges()))


def generate_family(family: str, **params) -> Iterator[Graph]:
    """Stream graphs of the named family; deterministic given identical params."""
    if family == "path":
        yield path_graph(params["n"])
    elif family == "cycle":
        yield cycle_graph(params["n"])
    elif family == "star":
        yield star_graph(params["n"])
    elif family == "complete":
        yield complete_graph(params["n"])
    elif family == "random_tree":
        count = params.get("count", 1)
        seed = params.get("seed", 0)
        for i in range(count):
            yield random_tree(params["n"], seed + i)
    elif family == "gnp":
        count = params.get("count", 1)
        seed = params.get("seed", 0)
        for i in range(count):
            yield gnp(params["n"], params["p"], seed + i)
    elif family == "all_connected":
        yield from all_connected_graphs(params["n"])
    elif family == "all_trees":
        yield from all_trees(params["n"])
    else:
        raise GraphError(f"unknown family {family!r}")
