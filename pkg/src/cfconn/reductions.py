"""Gadget constructions linking SAT, vertex coloring and strong conflict-free
connectivity, plus the DIMACS front end and a brute-force 3-SAT oracle.

Four constructions:

* 3-CNF formula        -> partial 2-edge-coloring instance (apex + cliques)
* partial 2-coloring   -> 2-subset instance (chain gadgets hanging off b1/c/b2)
* k-vertex-coloring    -> k-subset instance on a star
* star subset instance -> full strong-conflict-free instance (bipartite blowup)

Each instance records maps from source objects to gadget vertices/edges so
witnesses can be pulled back across the reduction.

Color convention: partial colorings use {0,1} as in the source problem; a
full EdgeColoring with colors {1,2} extends a partial coloring when
``full_color - 1 == partial_color`` on every assigned edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import ceil

from .coloring import EdgeColoring, PairSet, VertexColoring
from .graph import Graph, GraphError, build_graph, is_connected


# ---------------------------------------------------------------------------
# CNF formulas

@dataclass(frozen=True)
class CnfFormula:
    """3-CNF with DIMACS-style signed literals (positive i means variable i)."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3:
                raise GraphError(f"clause arity must be 3, got {cl}")
            vs = [abs(lit) for lit in cl]
            for v in vs:
                if not 1 <= v <= self.num_vars:
                    raise GraphError(f"literal {v} outside 1..{self.num_vars}")
            if len(set(vs)) != 3:
                raise GraphError(f"clause {cl} mentions a variable twice")

    def check_polarity_assumption(self) -> None:
        """Every variable must occur both positively and negatively."""
        pos = set()
        neg = set()
        for cl in self.clauses:
            for lit in cl:
                (pos if lit > 0 else neg).add(abs(lit))
        missing = sorted(set(range(1, self.num_vars + 1)) - (pos & neg))
        if missing:
            raise GraphError(
                f"variables {missing} do not occur with both polarities; the "
                "reduction assumes every variable appears positively and "
                "negatively (add clauses to your formula to enforce this)"
            )


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Standard DIMACS CNF; every clause must have exactly three literals.

    Tautological clauses (a variable in both polarities) are rejected because
    the occurrence-edge coloring of the reduction would be ill-defined.
    """
    num_vars = None
    num_clauses = None
    lits: list[int] = []
    clauses: list[tuple[int, int, int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphError(f"malformed DIMACS header: {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"malformed DIMACS header: {line!r}") from None
            continue
        if num_vars is None:
            raise GraphError("clause data before DIMACS header")
        try:
            tokens = [int(t) for t in line.split()]
        except ValueError:
            raise GraphError(f"bad clause line: {line!r}") from None
        for t in tokens:
            if t == 0:
                if len(lits) != 3:
                    raise GraphError(f"clause arity must be 3, got {len(lits)} literals")
                if len({abs(x) for x in lits}) != 3:
                    raise GraphError(f"tautological or repeated variable in clause {lits}")
                clauses.append((lits[0], lits[1], lits[2]))
                lits = []
            else:
                lits.append(t)
    if num_vars is None:
        raise GraphError("missing DIMACS header")
    if lits:
        raise GraphError("unterminated clause at end of input")
    if num_clauses is not None and len(clauses) != num_clauses:
        raise GraphError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def solve_3sat_bruteforce(f: CnfFormula, max_vars: int = 20) -> tuple[bool, ...] | None:
    """Lexicographically least satisfying assignment (False < True), or None."""
    if f.num_vars > max_vars:
        raise GraphError(f"brute-force SAT guard: {f.num_vars} > {max_vars} variables")
    n = f.num_vars
    for bits in range(1 << n):
        assign = tuple(bool(bits >> (n - 1 - j) & 1) for j in range(n))
        if all(
            any(assign[abs(lit) - 1] == (lit > 0) for lit in cl)
            for cl in f.clauses
        ):
            return assign
    return None


# ---------------------------------------------------------------------------
# Instances

@dataclass(frozen=True)
class PartialEdgeColoring:
    """2-color assignment on a subset of the host's edges (colors in {0,1})."""

    host: Graph
    assigned: dict = field(default_factory=dict)

    def __post_init__(self):
        for e, col in self.assigned.items():
            if not 0 <= e < self.host.m:
                raise GraphError(f"assigned edge id {e} out of range")
            if col not in (0, 1):
                raise GraphError(f"partial colors must be 0 or 1, got {col}")

    def extended_by(self, full: EdgeColoring) -> bool:
        """Does a {1,2}-valued full coloring extend this partial one?"""
        if len(full.colors) != self.host.m:
            return False
        return all(full.colors[e] - 1 == col for e, col in self.assigned.items())


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    pairs: PairSet | None = None
    partial: PartialEdgeColoring | None = None
    maps: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# 3-SAT -> partial 2-edge-coloring (apex vertex + occurrence edges + cliques)

def reduce_3sat_to_partial2(f: CnfFormula) -> ReductionInstance:
    """Clause vertices, variable vertices and an apex a; occurrence edges are
    precolored by literal polarity, clique edges get color 0, and only the
    variable-apex edges stay uncolored."""
    f.check_polarity_assumption()
    l = len(f.clauses)
    n = f.num_vars
    clause_v = {j: j for j in range(l)}
    var_v = {i: l + i for i in range(n)}  # variable i is 0-based here
    apex = l + n

    edges: list[tuple[int, int]] = []
    partial: dict[int, int] = {}
    occurrence_edge: dict[tuple[int, int], int] = {}
    for j, cl in enumerate(f.clauses):
        for lit in cl:
            i = abs(lit) - 1
            edges.append((var_v[i], clause_v[j]))
            partial[len(edges) - 1] = 0 if lit > 0 else 1
            occurrence_edge[(i, j)] = len(edges) - 1
    apex_edge = {}
    for i in range(n):
        edges.append((var_v[i], apex))
        apex_edge[i] = len(edges) - 1
    for a, b in combinations(range(l), 2):
        edges.append((clause_v[a], clause_v[b]))
        partial[len(edges) - 1] = 0
    for a, b in combinations(range(n), 2):
        edges.append((var_v[a], var_v[b]))
        partial[len(edges) - 1] = 0

    g = build_graph(l + n + 1, edges)
    return ReductionInstance(
        graph=g,
        partial=PartialEdgeColoring(host=g, assigned=partial),
        maps={
            "apex": apex,
            "variable": var_v,
            "clause": clause_v,
            "apex_edge": apex_edge,
            "occurrence_edge": occurrence_edge,
        },
    )


def clause_pairs(inst: ReductionInstance) -> PairSet:
    """The pairs {a, c_j} whose strong conflict-free connectivity encodes
    clause satisfaction."""
    apex = inst.maps["apex"]
    return PairSet([(apex, cv) for cv in inst.maps["clause"].values()], inst.graph.n)


def extract_sat_assignment(inst: ReductionInstance, full: EdgeColoring) -> tuple[bool, ...]:
    """Assignment read off the apex edges: x_i is True iff its apex edge got
    partial color 1 (full color 2)."""
    if inst.partial is None or not inst.partial.extended_by(full):
        raise GraphError("coloring does not extend the instance's partial coloring")
    apex_edge = inst.maps["apex_edge"]
    return tuple(full.colors[apex_edge[i]] == 2 for i in range(len(apex_edge)))


# ---------------------------------------------------------------------------
# Partial 2-edge-coloring -> 2-subset (chain gadgets)

def chain_length(n: int) -> int:
    """Odd chain length r derived from the host order."""
    r = ceil(n / 2)
    return r if r % 2 == 1 else r + 1


def reduce_partial2_to_subset(g: Graph, partial: PartialEdgeColoring) -> ReductionInstance:
    """Attach b1-c-b2 plus one alternation-forcing chain per precolored edge;
    the pair set pins every chain link, transferring the color of cb_i down to
    each edge precolored i.

    The vertex ordering used by the endpoint maps is the ambient index order:
    theta(e) is the higher endpoint, epsilon(e) the lower one.
    """
    if partial.host != g:
        raise GraphError("partial coloring must live on the given host graph")
    if not is_connected(g):
        raise GraphError("host graph must be connected")
    if g.n < 3 and partial.assigned:
        raise GraphError("chain construction needs a host with at least 3 vertices")
    n = g.n
    r = chain_length(n)
    colored = sorted(partial.assigned)

    b1, c, b2 = n, n + 1, n + 2
    next_v = n + 3
    ce: dict[int, int] = {}
    chain: dict[int, list[int]] = {}
    for e in colored:
        ce[e] = next_v
        next_v += 1
    for e in colored:
        chain[e] = list(range(next_v, next_v + r))
        next_v += r

    edges: list[tuple[int, int]] = list(g.edges)
    edges.append((b1, c))
    edges.append((b2, c))
    for e in colored:
        side = partial.assigned[e]  # 0 -> b1, 1 -> b2
        b = b1 if side == 0 else b2
        ts = chain[e]
        edges.append((b, ts[0]))
        for a, bb in zip(ts, ts[1:]):
            edges.append((a, bb))
        edges.append((ts[-1], ce[e]))
    for e in colored:
        u, v = g.edges[e]
        eps = min(u, v)
        edges.append((ce[e], eps))

    pairs: list[tuple[int, int]] = [(b1, b2)]
    pairs.extend(g.vertex_pairs())
    for e in colored:
        side = partial.assigned[e]
        b = b1 if side == 0 else b2
        ts = chain[e]
        u, v = g.edges[e]
        eps, theta = min(u, v), max(u, v)
        pairs.append((c, ts[0]))
        pairs.append((b, ts[1]))
        for j in range(r - 2):
            pairs.append((ts[j], ts[j + 2]))
        pairs.append((ts[r - 2], ce[e]))
        pairs.append((ts[r - 1], eps))
        pairs.append((ce[e], theta))

    gp = build_graph(next_v, edges)
    return ReductionInstance(
        graph=gp,
        pairs=PairSet(pairs, gp.n),
        maps={
            "b1": b1,
            "c": c,
            "b2": b2,
            "chain_vertex": ce,
            "chain": chain,
            "host_n": n,
            "host_edges": dict(enumerate(g.edges)),
        },
    )


# ---------------------------------------------------------------------------
# k-vertex-coloring -> k-subset on a star

def reduce_kcolor_to_subset(g: Graph, k: int) -> ReductionInstance:
    """Star with one leaf per vertex of g; the pair set mirrors E(g)."""
    if k < 3:
        raise GraphError("the star reduction targets k >= 3")
    x = g.n
    edges = [(v, x) for v in range(g.n)]
    star = build_graph(g.n + 1, edges)
    pairs = PairSet(list(g.edges), star.n)
    return ReductionInstance(
        graph=star,
        pairs=pairs,
        maps={"center": x, "k": k, "leaf_edge": {v: v for v in range(g.n)}},
    )


def extract_vertex_coloring(inst: ReductionInstance, c: EdgeColoring) -> VertexColoring:
    """Vertex v inherits the color of its star edge vx."""
    leaf_edge = inst.maps["leaf_edge"]
    return VertexColoring(colors=tuple(c.colors[leaf_edge[v]] for v in sorted(leaf_edge)),
                          k=c.k)


def is_proper_coloring(g: Graph, vc: VertexColoring) -> bool:
    return all(vc.colors[u] != vc.colors[v] for u, v in g.edges)


def brute_force_k_colorable(g: Graph, k: int) -> VertexColoring | None:
    """Backtracking k-colorability check; ground truth for the star reduction."""
    colors = [0] * g.n

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        used_cap = min(k, max(colors[:v], default=0) + 1)
        for col in range(1, used_cap + 1):
            if all(colors[w] != col for w in g.adj[v] if w < v):
                colors[v] = col
                if rec(v + 1):
                    return True
        colors[v] = 0
        return False

    if rec(0):
        return VertexColoring(colors=tuple(colors), k=k)
    return None


# ---------------------------------------------------------------------------
# star subset instance -> full strong conflict-free instance

def _star_center(star: Graph) -> int:
    if star.n < 2 or star.m != star.n - 1:
        raise GraphError("input is not a star")
    if star.n == 2:
        return 0
    centers = [v for v in range(star.n) if star.degree(v) == star.n - 1]
    if not centers:
        raise GraphError("input is not a star")
    return centers[0]


def reduce_subset_star_to_scfc(star: Graph, p: PairSet) -> ReductionInstance:
    """Bipartite blowup: one marker per leaf, one per leaf pair outside p, a
    primed copy of each, a complete bipartite coupling between markers and
    primes, and apex edges to the primes.  Inside the result, each p-pair
    keeps its star path as the unique length-2 route."""
    center = _star_center(star)
    leaves = [v for v in range(star.n) if v != center]
    leaf_set = set(leaves)
    for u, v in p:
        if u not in leaf_set or v not in leaf_set:
            raise GraphError(f"pair ({u},{v}) is not a pair of leaves")
    non_pairs = [uv for uv in combinations(leaves, 2) if uv not in p]

    next_v = star.n
    x_leaf: dict[int, int] = {}
    x_nonpair: dict[tuple[int, int], int] = {}
    for v in leaves:
        x_leaf[v] = next_v
        next_v += 1
    for uv in non_pairs:
        x_nonpair[uv] = next_v
        next_v += 1
    v1 = [x_leaf[v] for v in leaves] + [x_nonpair[uv] for uv in non_pairs]
    xp_leaf: dict[int, int] = {}
    xp_nonpair: dict[tuple[int, int], int] = {}
    for v in leaves:
        xp_leaf[v] = next_v
        next_v += 1
    for uv in non_pairs:
        xp_nonpair[uv] = next_v
        next_v += 1
    v2 = [xp_leaf[v] for v in leaves] + [xp_nonpair[uv] for uv in non_pairs]

    edges: list[tuple[int, int]] = list(star.edges)
    e1 = [(v, x_leaf[v]) for v in leaves]
    e2 = []
    for u, v in non_pairs:
        e2.append((u, x_nonpair[(u, v)]))
        e2.append((v, x_nonpair[(u, v)]))
    e3 = [(x, xp) for x in v1 for xp in v2]
    e4 = [(center, xp) for xp in v2]
    edges.extend(e1 + e2 + e3 + e4)

    gp = build_graph(next_v, edges)
    return ReductionInstance(
        graph=gp,
        pairs=p,
        maps={
            "center": center,
            "leaves": leaves,
            "x_leaf": x_leaf,
            "x_nonpair": x_nonpair,
            "xp_leaf": xp_leaf,
            "xp_nonpair": xp_nonpair,
            "v1": v1,
            "v2": v2,
            "star_m": star.m,
        },
    )


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def forward_color_subset_star(inst: ReductionInstance, c: EdgeColoring) -> EdgeColoring:
    """Extend a star coloring that handles every p-pair to the whole gadget.

    Star edges keep their colors; leaf markers and apex edges get color 3;
    non-pair couplings get colors 1/2; the bipartite coupling is split along
    the index-aligned perfect matching (color 1) versus the rest (color 2).
    """
    from .verify import verify_scfc, verify_scfc_subset

    gp = inst.graph
    star_m = inst.maps["star_m"]
    if c.k < 3:
        raise GraphError("star coloring must declare at least 3 colors")
    if len(c.colors) != star_m:
        raise GraphError("coloring does not match the source star")
    star = build_graph(star_m + 1, gp.edges[:star_m])
    if inst.pairs is not None and len(inst.pairs) > 0:
        if not verify_scfc_subset(star, c, inst.pairs).ok:
            raise GraphError(
                "star coloring does not strongly conflict-free connect every pair in p"
            )

    v1 = inst.maps["v1"]
    v2 = inst.maps["v2"]
    matched = {(x, xp) for x, xp in zip(v1, v2)}
    leaves = set(inst.maps["leaves"])
    x_leaf_set = set(inst.maps["x_leaf"].values())
    xp_set = set(v2)
    x_nonpair_set = set(inst.maps["x_nonpair"].values())
    center = inst.maps["center"]

    colors = list(c.colors)
    for e in range(star_m, gp.m):
        u, v = gp.edges[e]
        a, b = (u, v) if u < v else (v, u)
        if a in leaves and b in x_leaf_set:
            colors.append(3)
        elif a in leaves and b in x_nonpair_set:
            uv_pair = next(uv for uv, x in inst.maps["x_nonpair"].items() if x == b)
            colors.append(1 if a == uv_pair[0] else 2)
        elif (u in xp_set) != (v in xp_set) and center in (u, v):
            colors.append(3)
        else:
            x, xp = (u, v) if v in xp_set and u not in xp_set else (v, u)
            colors.append(1 if (x, xp) in matched else 2)
    full = EdgeColoring(colors=tuple(colors), k=max(c.k, 3))
    if not verify_scfc(gp, full).ok:
        raise RuntimeError("forward coloring failed strong conflict-free verification")
    return full
