"""Exact connection numbers by canonical coloring search.

The search enumerates canonical colorings (first-use symmetry breaking) by
depth-first assignment in item order, with a sound prune: once every
candidate path of some vertex pair is fully colored, that pair's verdict is
final, so a branch in which a decided pair has no conflict-free candidate
path is abandoned.  Nothing feasible is ever pruned, so an exhausted level k
proves that k colors are insufficient, and the first complete assignment
found is the lexicographically least canonical witness.

Candidate paths per pair: all simple paths (cfc / vcfc), all shortest paths
(scfc), simple paths of length at most k (rainbow; longer ones cannot be
rainbow).  Every returned witness is re-checked by the corresponding
polynomial verifier (or the rainbow oracle) before being reported.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, PairSet, VertexColoring
from .graph import Graph, GraphError, bfs_distances, is_connected
from .oracles import SizeGuardExceeded, _iter_simple_paths, oracle_rainbow_connected
from .verify import verify_cfc_edge, verify_cfc_vertex, verify_scfc, verify_scfc_subset

DEFAULT_BUDGET = 5_000_000
PATH_LIMIT = 200_000


class BudgetExceeded(GraphError):
    def __init__(self, bounds: tuple[int, int]):
        super().__init__(f"search budget exhausted; value within bounds {bounds}")
        self.bounds = bounds


@dataclass(frozen=True)
class SolveResult:
    status: str  # "exact" | "inconclusive"
    value: int | None
    witness: EdgeColoring | VertexColoring | None
    bounds: tuple[int, int] | None = None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, left: int):
        self.left = left


class _BudgetSignal(Exception):
    pass


def _search(num_items: int, k: int, pair_paths, rainbow: bool, budget: _Budget):
    """First canonical k-coloring (as a tuple) satisfying every pair, or None."""
    for paths in pair_paths:
        if not paths:
            return None
    by_depth: list[list[int]] = [[] for _ in range(num_items)]
    for pi, paths in enumerate(pair_paths):
        trig = max(max(p) for p in paths)
        by_depth[trig].append(pi)
    if num_items == 0:
        return ()
    colors = [0] * num_items

    def pair_ok(pi: int) -> bool:
        budget.left -= 1
        if budget.left < 0:
            raise _BudgetSignal
        if rainbow:
            for path in pair_paths[pi]:
                cs = [colors[e] for e in path]
                if len(set(cs)) == len(cs):
                    return True
            return False
        for path in pair_paths[pi]:
            counts: dict[int, int] = {}
            for e in path:
                c = colors[e]
                counts[c] = counts.get(c, 0) + 1
            if 1 in counts.values():
                return True
        return False

    def rec(i: int, max_used: int) -> bool:
        for c in range(1, min(max_used + 1, k) + 1):
            colors[i] = c
            mu = c if c > max_used else max_used
            if all(pair_ok(pi) for pi in by_depth[i]):
                if i + 1 == num_items:
                    return True
                if rec(i + 1, mu):
                    return True
        colors[i] = 0
        return False

    return tuple(colors) if rec(0, 0) else None


def _collect(paths_iter, out: list, limit: int = PATH_LIMIT):
    for p in paths_iter:
        out.append(p)
        if len(out) > limit:
            raise SizeGuardExceeded(
                f"path enumeration exceeded {limit} paths; instance too large for exact search"
            )
    # short paths first: satisfied pairs are detected quickly
    out.sort(key=len)
    return out


def _edge_ids(g: Graph, path) -> tuple[int, ...]:
    eid = g.eid
    out = []
    for i in range(len(path) - 1):
        a, b = path[i], path[i + 1]
        out.append(eid[(a, b) if a < b else (b, a)])
    return tuple(out)


def _paths_cfc_edge(g: Graph):
    return [
        _collect((_edge_ids(g, p) for p in _iter_simple_paths(g, u, v, None)), [])
        for u, v in g.vertex_pairs()
    ]


def _paths_cfc_vertex(g: Graph):
    return [
        _collect(_iter_simple_paths(g, u, v, None), [])
        for u, v in g.vertex_pairs()
    ]


def _paths_scfc(g: Graph, pairs):
    out = []
    dist_cache: dict[int, tuple[int, ...]] = {}
    for u, v in pairs:
        if u not in dist_cache:
            dist_cache[u] = bfs_distances(g, u).dist
        d = dist_cache[u][v]
        if d < 0:
            # unreachable pair: no candidate paths, never satisfiable
            out.append([])
            continue
        out.append(
            _collect(
                (_edge_ids(g, p) for p in _iter_simple_paths(g, u, v, d) if len(p) - 1 == d),
                [],
            )
        )
    return out


def _paths_rainbow(g: Graph, k: int):
    return [
        _collect(
            (_edge_ids(g, p) for p in _iter_simple_paths(g, u, v, k)),
            [],
        )
        for u, v in g.vertex_pairs()
    ]


def _require_solvable(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("solver requires a connected graph")


def _deepen(g: Graph, k_upper: int, paths_for_k, budget: int, recheck, make_witness) -> SolveResult:
    """Iterative deepening on k; first feasible level is the exact value."""
    state = _Budget(budget)
    for k in range(1, k_upper + 1):
        try:
            found = _search_level(g, k, paths_for_k(k), state)
        except _BudgetSignal:
            return SolveResult(status="inconclusive", value=None, witness=None,
                               bounds=(k, k_upper))
        if found is not None:
            witness = make_witness(found, k)
            if not recheck(witness):
                raise RuntimeError("search produced a witness the verifier rejects")
            return SolveResult(status="exact", value=k, witness=witness)
    raise RuntimeError("no feasible coloring found up to the trivial upper bound")


def _search_level(g: Graph, k: int, spec, state: _Budget):
    num_items, pair_paths, rainbow = spec
    return _search(num_items, k, pair_paths, rainbow, state)


def solve_cfc(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact conflict-free connection number with a verified witness coloring."""
    _require_solvable(g)
    pair_paths = _paths_cfc_edge(g)
    k_upper = max(g.m, 1)
    return _deepen(
        g, k_upper, lambda k: (g.m, pair_paths, False), budget,
        lambda w: verify_cfc_edge(g, w).ok,
        lambda colors, k: EdgeColoring(colors=colors, k=k),
    )


def solve_vcfc(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact conflict-free vertex-connection number."""
    _require_solvable(g)
    pair_paths = _paths_cfc_vertex(g)
    return _deepen(
        g, g.n, lambda k: (g.n, pair_paths, False), budget,
        lambda w: verify_cfc_vertex(g, w).ok,
        lambda colors, k: VertexColoring(colors=colors, k=k),
    )


def solve_scfc(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact strong conflict-free connection number."""
    _require_solvable(g)
    pair_paths = _paths_scfc(g, g.vertex_pairs())
    k_upper = max(g.m, 1)
    return _deepen(
        g, k_upper, lambda k: (g.m, pair_paths, False), budget,
        lambda w: verify_scfc(g, w).ok,
        lambda colors, k: EdgeColoring(colors=colors, k=k),
    )


def solve_rc_small(g: Graph, budget: int = DEFAULT_BUDGET, max_n: int = 12) -> SolveResult:
    """Exact rainbow connection number; small instances only."""
    _require_solvable(g)
    if g.n > max_n:
        raise SizeGuardExceeded(f"solve_rc_small guard: n={g.n} > {max_n}")
    k_upper = max(g.m, 1)
    return _deepen(
        g, k_upper, lambda k: (g.m, _paths_rainbow(g, k), True), budget,
        lambda w: oracle_rainbow_connected(g, w, max_n=max_n),
        lambda colors, k: EdgeColoring(colors=colors, k=k),
    )


def decide_subset_scfc(g: Graph, p: PairSet, k: int,
                       budget: int = DEFAULT_BUDGET) -> EdgeColoring | None:
    """Witness k-edge-coloring making every pair in p strongly conflict-free
    connected, or None after exhausting the canonical search.

    g may be disconnected; a pair split across components makes the answer
    None immediately.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    pair_paths = _paths_scfc(g, list(p))
    state = _Budget(budget)
    try:
        found = _search(g.m, k, pair_paths, False, state)
    except _BudgetSignal:
        raise BudgetExceeded((1, k)) from None
    if found is None:
        return None
    witness = EdgeColoring(colors=found, k=k)
    if not verify_scfc_subset(g, witness, p).ok:
        raise RuntimeError("search produced a witness the verifier rejects")
    return witness
