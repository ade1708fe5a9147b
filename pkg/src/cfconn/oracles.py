"""Exponential-time ground truth by explicit path enumeration.

These are test instruments for small graphs only: every entry point enforces a
hard size guard and fails loudly instead of running for hours.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, VertexColoring, check_edge_coloring, check_vertex_coloring
from .graph import Graph, GraphError, bfs_distances

DEFAULT_MAX_N = 12


class SizeGuardExceeded(GraphError):
    pass


def _guard(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise SizeGuardExceeded(
            f"oracle size guard: n={g.n} exceeds limit {max_n}; "
            "oracles are meant for small validation instances only"
        )


@dataclass(frozen=True)
class PathList:
    paths: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


def _iter_simple_paths(g: Graph, u: int, v: int, max_len: int | None):
    """Depth-first extension with a visited mask; neighbor-index order."""
    limit = max_len if max_len is not None else g.n - 1
    path = [u]
    # stack of neighbor iterators
    stack = [iter(g.adj[u])]
    visited = 1 << u
    while stack:
        it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            visited ^= 1 << path.pop()
            continue
        if visited >> w & 1:
            continue
        if w == v:
            yield tuple(path) + (v,)
            continue
        if len(path) < limit:
            path.append(w)
            visited |= 1 << w
            stack.append(iter(g.adj[w]))


def enumerate_simple_paths(g: Graph, u: int, v: int, max_len: int | None = None,
                           max_n: int = DEFAULT_MAX_N) -> PathList:
    """All simple u-v paths with at most max_len edges (all lengths if None)."""
    _guard(g, max_n)
    if u == v:
        raise GraphError("endpoints must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("endpoint out of range")
    return PathList(paths=tuple(_iter_simple_paths(g, u, v, max_len)))


def path_edge_ids(g: Graph, path: tuple[int, ...]) -> list[int]:
    return [g.edge_index(path[i], path[i + 1]) for i in range(len(path) - 1)]


def edge_path_conflict_free(colors, edge_ids) -> bool:
    """Some color has multiplicity exactly 1 among the path's edges."""
    seen: dict[int, int] = {}
    for e in edge_ids:
        c = colors[e]
        seen[c] = seen.get(c, 0) + 1
    return any(cnt == 1 for cnt in seen.values())


def vertex_path_conflict_free(colors, path) -> bool:
    """Some color has multiplicity exactly 1 among the path's vertices."""
    seen: dict[int, int] = {}
    for v in path:
        c = colors[v]
        seen[c] = seen.get(c, 0) + 1
    return any(cnt == 1 for cnt in seen.values())


def edge_path_rainbow(colors, edge_ids) -> bool:
    cs = [colors[e] for e in edge_ids]
    return len(set(cs)) == len(cs)


def oracle_cfc_edge(g: Graph, c: EdgeColoring, max_n: int = DEFAULT_MAX_N) -> bool:
    """Every pair joined by some simple path with a uniquely-used edge color."""
    _guard(g, max_n)
    check_edge_coloring(g, c)
    for u, v in g.vertex_pairs():
        if not any(
            edge_path_conflict_free(c.colors, path_edge_ids(g, p))
            for p in _iter_simple_paths(g, u, v, None)
        ):
            return False
    return True


def oracle_cfc_vertex(g: Graph, c: VertexColoring, max_n: int = DEFAULT_MAX_N) -> bool:
    """Every pair joined by some simple path with a uniquely-used vertex color."""
    _guard(g, max_n)
    check_vertex_coloring(g, c)
    for u, v in g.vertex_pairs():
        if not any(
            vertex_path_conflict_free(c.colors, p)
            for p in _iter_simple_paths(g, u, v, None)
        ):
            return False
    return True


def oracle_scfc(g: Graph, c: EdgeColoring, max_n: int = DEFAULT_MAX_N) -> bool:
    """Every pair has a conflict-free path of length exactly d_G(u,v)."""
    _guard(g, max_n)
    check_edge_coloring(g, c)
    for u in range(g.n):
        dist = bfs_distances(g, u).dist
        for v in range(u + 1, g.n):
            d = dist[v]
            if d < 0:
                return False
            if not any(
                len(p) - 1 == d and edge_path_conflict_free(c.colors, path_edge_ids(g, p))
                for p in _iter_simple_paths(g, u, v, d)
            ):
                return False
    return True


def oracle_scfc_subset(g: Graph, c: EdgeColoring, pairs, max_n: int = DEFAULT_MAX_N) -> bool:
    """oracle_scfc restricted to a pair set."""
    _guard(g, max_n)
    check_edge_coloring(g, c)
    for u, v in pairs:
        d = bfs_distances(g, u).dist[v]
        if d < 0:
            return False
        if not any(
            len(p) - 1 == d and edge_path_conflict_free(c.colors, path_edge_ids(g, p))
            for p in _iter_simple_paths(g, u, v, d)
        ):
            return False
    return True


def oracle_rainbow_connected(g: Graph, c: EdgeColoring, max_n: int = DEFAULT_MAX_N) -> bool:
    """Every pair joined by a path with pairwise distinct edge colors.

    Paths longer than the number of distinct colors cannot be rainbow, so the
    enumeration is capped there.
    """
    _guard(g, max_n)
    check_edge_coloring(g, c)
    cap = len(set(c.colors)) if c.colors else 0
    for u, v in g.vertex_pairs():
        if not any(
            edge_path_rainbow(c.colors, path_edge_ids(g, p))
            for p in _iter_simple_paths(g, u, v, cap)
        ):
            return False
    return True
