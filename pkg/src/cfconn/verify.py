"""Polynomial-time verifiers for conflict-free connectivity of colored graphs.

Three verdict procedures over a connected graph and a total coloring:

* ``verify_cfc_edge``   -- is every pair joined by a path with a uniquely
  colored edge?  Pair/color/edge scan with a cut-vertex test deciding whether
  a u-v path through a candidate edge exists.
* ``verify_cfc_vertex`` -- vertex-colored analogue, with the endpoint-color
  shortcuts (the endpoint's own color class never needs a candidate scan).
* ``verify_scfc``       -- shortest-path variant driven by distance equalities
  around vertical edges; ``verify_scfc_subset`` restricts it to a pair set.

All reachability and distance queries run on bitmask adjacency, recomputed
per candidate (no incremental maintenance).
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    EdgeColoring,
    PairSet,
    VertexColoring,
    check_edge_coloring,
    check_vertex_coloring,
)
from .graph import Graph, GraphError, is_connected, reach_mask

_INF = 1 << 30


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    witness_pair: tuple[int, int] | None = None
    # success audit: list of (pair, certifier); edge id / vertex / (edge, s, t)
    witness_detail: tuple | None = None

    def __post_init__(self):
        if self.ok and self.witness_pair is not None:
            raise GraphError("ok report must not carry a witness pair")
        if not self.ok and self.witness_pair is None:
            raise GraphError("failing report must carry a witness pair")


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("verifier requires a connected graph")


def _color_adj_masks(g: Graph, class_edges) -> list[int]:
    """Adjacency masks of G minus the given edge ids."""
    masks = list(g.adj_mask)
    for e in class_edges:
        u, v = g.edges[e]
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    return masks


def _bfs_inf(adj_mask, root: int, n: int, alive: int) -> list[int]:
    """Distance array with _INF for unreachable vertices."""
    dist = [_INF] * n
    if not alive >> root & 1:
        return dist
    dist[root] = 0
    seen = 1 << root
    frontier = seen
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


def _edge_certifies_pair(g: Graph, masks, u: int, v: int, s: int, t: int) -> bool:
    """Is there a u-v path through edge st in G'' = (G - E_i) + st?

    True iff u, v, s, t share a component of G'' and no single vertex z leaves
    both u and v cut off from both s and t in G'' - z.
    """
    full = (1 << g.n) - 1
    # G'' adjacency: masks plus the candidate edge
    ms = masks[s] | 1 << t
    mt = masks[t] | 1 << s

    def madj(x: int) -> int:
        if x == s:
            return ms
        if x == t:
            return mt
        return masks[x]

    adj = [madj(x) for x in range(g.n)]
    r = reach_mask(adj, s, full)
    if not (r >> u & 1 and r >> v & 1 and r >> t & 1):
        return False
    for z in range(g.n):
        alive = full & ~(1 << z)
        reach = 0
        if z != s:
            reach = reach_mask(adj, s, alive)
        if z != t and not reach >> t & 1:
            reach |= reach_mask(adj, t, alive)
        if not (reach >> u & 1 or reach >> v & 1):
            return False  # z leaves u and v cut off from both s and t
    return True


def verify_cfc_edge(g: Graph, c: EdgeColoring, audit: bool = False) -> VerifyReport:
    """Conflict-free connectivity check for an edge-colored graph.

    Pairs are scanned in lexicographic order; the first failing pair is the
    witness.  Empty color classes are skipped.
    """
    _require_connected(g)
    check_edge_coloring(g, c)
    classes = c.color_classes()
    masks_by_color: dict[int, list[int]] = {}
    details = []
    for u, v in g.vertex_pairs():
        certified = False
        for i in sorted(classes):
            masks = masks_by_color.get(i)
            if masks is None:
                masks = masks_by_color[i] = _color_adj_masks(g, classes[i])
            for e in classes[i]:
                s, t = g.edges[e]
                if _edge_certifies_pair(g, masks, u, v, s, t):
                    certified = True
                    if audit:
                        details.append(((u, v), e))
                    break
            if certified:
                break
        if not certified:
            return VerifyReport(ok=False, witness_pair=(u, v))
    return VerifyReport(ok=True, witness_detail=tuple(details) if audit else None)


def _vertex_certifies_pair(g: Graph, class_mask: int, u: int, v: int, w: int) -> bool:
    """Is there a u-v path through vertex w in G'' = (G - V_i) + w?"""
    full = (1 << g.n) - 1
    alive0 = (full & ~class_mask) | 1 << w
    r = reach_mask(g.adj_mask, w, alive0)
    if not (r >> u & 1 and r >> v & 1):
        return False
    for z in range(g.n):
        if z == w:
            continue
        reach = reach_mask(g.adj_mask, w, alive0 & ~(1 << z))
        if not (reach >> u & 1 or reach >> v & 1):
            return False  # z leaves u and v cut off from w
    return True


def verify_cfc_vertex(g: Graph, c: VertexColoring, audit: bool = False) -> VerifyReport:
    """Conflict-free vertex-connectivity check for a vertex-colored graph."""
    _require_connected(g)
    check_vertex_coloring(g, c)
    classes = c.color_classes()
    class_mask = {i: sum(1 << v for v in vs) for i, vs in classes.items()}
    full = (1 << g.n) - 1
    details = []
    for u, v in g.vertex_pairs():
        cu, cv = c.colors[u], c.colors[v]
        certified = False
        if cu != cv:
            # color cu can only be unique at u itself: drop V_cu \ {u}, no re-adding
            for w, i in ((u, cu), (v, cv)):
                alive = (full & ~class_mask[i]) | 1 << w
                if reach_mask(g.adj_mask, w, alive) >> (v if w == u else u) & 1:
                    certified = True
                    if audit:
                        details.append(((u, v), w))
                    break
        if not certified:
            for i in sorted(classes):
                if i == cu or i == cv:
                    continue  # never the unique color when equal; handled above otherwise
                for w in classes[i]:
                    if _vertex_certifies_pair(g, class_mask[i], u, v, w):
                        certified = True
                        if audit:
                            details.append(((u, v), w))
                        break
                if certified:
                    break
        if not certified:
            return VerifyReport(ok=False, witness_pair=(u, v))
    return VerifyReport(ok=True, witness_detail=tuple(details) if audit else None)


def _scfc_pair_ok(g: Graph, classes, masks_by_color, dist_cache, a: int, b: int,
                  audit_out=None) -> bool:
    """One orientation of the shortest-path scan: a as source."""
    da = dist_cache(a)
    d = da[b]
    if d >= _INF:
        return False  # unreachable pair: no shortest path at all
    n = g.n
    full = (1 << n) - 1
    for i in sorted(classes):
        masks = masks_by_color.get(i)
        if masks is None:
            masks = masks_by_color[i] = _color_adj_masks(g, classes[i])
        da_p = None
        db_p = None
        for e in classes[i]:
            x, y = g.edges[e]
            dx, dy = da[x], da[y]
            if dx == dy:
                continue  # horizontal w.r.t. a
            s, t = (x, y) if dx < dy else (y, x)
            if da[t] > d:
                continue
            if da_p is None:
                da_p = _bfs_inf(masks, a, n, full)
                db_p = _bfs_inf(masks, b, n, full)
            # adding the single edge st to G - E_i
            das = min(da_p[s], da_p[t] + 1)
            dbt = min(db_p[t], db_p[s] + 1)
            if das == da[s] and dbt == d - da[t]:
                if audit_out is not None:
                    audit_out.append(((min(a, b), max(a, b)), (e, s, t)))
                return True
    return False


def _verify_scfc_pairs(g: Graph, c: EdgeColoring, pairs, audit: bool,
                       require_connected: bool = True) -> VerifyReport:
    if require_connected:
        _require_connected(g)
    check_edge_coloring(g, c)
    classes = c.color_classes()
    dist_store: dict[int, list[int]] = {}

    def dist_cache(a: int) -> list[int]:
        dtab = dist_store.get(a)
        if dtab is None:
            dtab = dist_store[a] = _bfs_inf(g.adj_mask, a, g.n, (1 << g.n) - 1)
        return dtab

    details: list = []
    audit_out = details if audit else None
    masks_by_color: dict[int, list[int]] = {}
    for u, v in pairs:
        # scan with the smaller endpoint as source, then swapped as a safety margin
        if _scfc_pair_ok(g, classes, masks_by_color, dist_cache, u, v, audit_out):
            continue
        if _scfc_pair_ok(g, classes, masks_by_color, dist_cache, v, u, audit_out):
            continue
        return VerifyReport(ok=False, witness_pair=(u, v))
    return VerifyReport(ok=True, witness_detail=tuple(details) if audit else None)


def verify_scfc(g: Graph, c: EdgeColoring, audit: bool = False) -> VerifyReport:
    """Strong conflict-free connectivity: every pair needs a conflict-free
    path of length exactly its distance."""
    return _verify_scfc_pairs(g, c, g.vertex_pairs(), audit)


def verify_scfc_subset(g: Graph, c: EdgeColoring, p: PairSet, audit: bool = False) -> VerifyReport:
    """verify_scfc restricted to the pairs in p; an empty p passes vacuously.

    Unlike the all-pairs variant, g may be disconnected: a pair split across
    components has no shortest path and simply fails.
    """
    for u, v in p:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"pair endpoint out of range: ({u},{v})")
    return _verify_scfc_pairs(g, c, list(p), audit, require_connected=False)
