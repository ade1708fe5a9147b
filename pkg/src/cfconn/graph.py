"""Immutable simple-graph representation and the traversal primitives.

Vertices are dense integers 0..n-1.  Edges carry stable indices: edge i is
the i-th entry of the edge list for the lifetime of the graph, so edge
colorings can be plain arrays indexed by edge id.
"""
from __future__ import annotations

from dataclasses import dataclass, field

UNREACHABLE = -1  # sentinel distance; fails every equality test against real distances

VERTICAL = "vertical"
HORIZONTAL = "horizontal"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False)
    # adjacency as bitmasks, one int per vertex; bit v of adj_mask[u] set iff uv is an edge
    adj_mask: tuple[int, ...] = field(compare=False)
    # incident edge ids per vertex
    inc: tuple[tuple[int, ...], ...] = field(compare=False)
    # (u,v) normalized -> edge id
    eid: dict = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.eid[(u, v)]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def vertex_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)]

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def build_graph(n: int, edges) -> Graph:
    """Build a simple undirected graph; rejects loops, duplicates and bad endpoints."""
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    norm: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u},{v}) with n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        norm.append((u, v))

    adj: list[list[int]] = [[] for _ in range(n)]
    inc: list[list[int]] = [[] for _ in range(n)]
    mask = [0] * n
    for i, (u, v) in enumerate(norm):
        adj[u].append(v)
        adj[v].append(u)
        inc[u].append(i)
        inc[v].append(i)
        mask[u] |= 1 << v
        mask[v] |= 1 << u
    return Graph(
        n=n,
        edges=tuple(norm),
        adj=tuple(tuple(a) for a in adj),
        adj_mask=tuple(mask),
        inc=tuple(tuple(a) for a in inc),
        eid={uv: i for i, uv in enumerate(norm)},
    )


@dataclass(frozen=True)
class DistanceTable:
    source: int
    dist: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.dist[v]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def reach_mask(adj_mask, start: int, alive: int) -> int:
    """Bitmask of vertices reachable from `start` using only vertices in `alive`."""
    seen = 1 << start & alive
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj_mask[b.bit_length() - 1]
            f ^= b
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def dfs_component(g: Graph, root: int, removed_vertices=(), removed_edges=()) -> set[int]:
    """Vertices reachable from `root` after deleting the given vertices and edge ids.

    Depth-first, neighbor-index order; the frontier order does not affect the
    returned set.
    """
    _check_vertex(g, root)
    rv = set(removed_vertices)
    if root in rv:
        raise GraphError(f"root {root} is removed")
    re = set(removed_edges)
    blocked: dict[int, set[int]] = {}
    for i in re:
        u, v = g.edges[i]
        blocked.setdefault(u, set()).add(v)
        blocked.setdefault(v, set()).add(u)
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        bu = blocked.get(u, ())
        for v in g.adj[u]:
            if v in seen or v in rv or v in bu:
                continue
            seen.add(v)
            stack.append(v)
    return seen


def bfs_distances(g: Graph, root: int, removed_edges=()) -> DistanceTable:
    """Hop distances from `root` in the graph minus the given edge ids."""
    _check_vertex(g, root)
    if removed_edges:
        re = set(removed_edges)
        adj: list[list[int]] = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(g.edges):
            if i not in re:
                adj[u].append(v)
                adj[v].append(u)
    else:
        adj = g.adj  # type: ignore[assignment]
    dist = [UNREACHABLE] * g.n
    dist[root] = 0
    queue = [root]
    while queue:
        nxt = []
        for u in queue:
            du = dist[u] + 1
            for v in adj[u]:
                if dist[v] == UNREACHABLE:
                    dist[v] = du
                    nxt.append(v)
        queue = nxt
    return DistanceTable(source=root, dist=tuple(dist))


def bfs_dist_mask(adj_mask, root: int, alive: int, n: int) -> list[int]:
    """Distance array via bitmask frontier expansion; UNREACHABLE where not reached."""
    dist = [UNREACHABLE] * n
    start = 1 << root & alive
    if not start:
        return dist
    dist[root] = 0
    seen = start
    frontier = start
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj_mask[b.bit_length() - 1]
            f ^= b
        frontier = nxt & alive & ~seen
        seen |= frontier
        f = frontier
        while f:
            b = f & -f
            dist[b.bit_length() - 1] = d
            f ^= b
    return dist


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return reach_mask(g.adj_mask, 0, full) == full


def classify_edge(g: Graph, u: int, e: int) -> str:
    """Vertical iff the endpoint distances from u differ by exactly 1."""
    _check_vertex(g, u)
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range")
    if not is_connected(g):
        raise GraphError("classify_edge requires a connected graph")
    dist = bfs_distances(g, u).dist
    s, t = g.edges[e]
    return VERTICAL if abs(dist[s] - dist[t]) == 1 else HORIZONTAL


def cut_vertices_and_blocks(g: Graph) -> tuple[set[int], list[set[int]]]:
    """Biconnected decomposition: (cut vertices, blocks as edge-id sets).

    Iterative Hopcroft-Tarjan.  Every edge lands in exactly one block; a
    vertex is a cut vertex iff it lies in two or more blocks.
    """
    if not is_connected(g):
        raise GraphError("cut_vertices_and_blocks requires a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    blocks: list[set[int]] = []
    edge_stack: list[int] = []
    timer = 0

    root = 0
    # stack entries: (vertex, parent edge id, iterator position over incident edges)
    stack: list[list[int]] = [[root, -1, 0]]
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    while stack:
        frame = stack[-1]
        u, pe, idx = frame
        if idx < len(g.inc[u]):
            frame[2] += 1
            ei = g.inc[u][idx]
            if ei == pe:
                continue
            a, b = g.edges[ei]
            v = b if a == u else a
            if disc[v] == -1:
                edge_stack.append(ei)
                disc[v] = low[v] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append([v, ei, 0])
            elif disc[v] < disc[u]:
                edge_stack.append(ei)
                if disc[v] < low[u]:
                    low[u] = disc[v]
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    # p closes a block containing the tree edge pe
                    blk: set[int] = set()
                    while True:
                        ei = edge_stack.pop()
                        blk.add(ei)
                        if ei == pe:
                            break
                    blocks.append(blk)
                    if p != root:
                        cuts.add(p)
    if root_children >= 2:
        cuts.add(root)
    return cuts, blocks


def is_two_connected(g: Graph) -> bool:
    """2-connected: n >= 3, connected, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    cuts, _ = cut_vertices_and_blocks(g)
    return not cuts


def is_two_edge_connected(g: Graph) -> bool:
    """Connected with no bridge (every block has at least two edges), n >= 2."""
    if g.n < 2 or not is_connected(g):
        return False
    _, blocks = cut_vertices_and_blocks(g)
    return all(len(b) >= 2 for b in blocks) and g.m >= 1


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise GraphError("diameter requires a connected graph")
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_distances(g, v).dist))
    return best
