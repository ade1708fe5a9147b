"""Text interchange formats for graphs, colorings, pair sets, partial
colorings and reduction maps.

Graph edge-list format: first non-comment line "n m", then m lines "u v"
(0-based).  Lines starting with '#' are comments throughout; the pairs file
uses "p u v" lines instead.
"""
from __future__ import annotations

from .coloring import EdgeColoring, PairSet, VertexColoring
from .graph import Graph, GraphError, build_graph


def _data_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def read_graph(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"bad header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {line!r}") from None
    return build_graph(n, edges)


def write_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _read_colors(text: str, count: int, what: str):
    lines = list(_data_lines(text))
    if not lines:
        raise GraphError(f"empty {what} coloring file")
    try:
        k = int(lines[0])
    except ValueError:
        raise GraphError(f"expected k on line one, got {lines[0]!r}") from None
    if len(lines) - 1 != count:
        raise GraphError(f"expected {count} {what} color lines, found {len(lines) - 1}")
    try:
        colors = tuple(int(s) for s in lines[1:])
    except ValueError:
        raise GraphError(f"non-integer color in {what} coloring") from None
    return colors, k


def read_edge_coloring(text: str, g: Graph) -> EdgeColoring:
    colors, k = _read_colors(text, g.m, "edge")
    return EdgeColoring(colors=colors, k=k)


def read_vertex_coloring(text: str, g: Graph) -> VertexColoring:
    colors, k = _read_colors(text, g.n, "vertex")
    return VertexColoring(colors=colors, k=k)


def write_coloring(c: EdgeColoring | VertexColoring) -> str:
    return "\n".join([str(c.k)] + [str(x) for x in c.colors]) + "\n"


def read_pairs(text: str, n: int | None = None) -> PairSet:
    pairs = []
    for line in _data_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "p":
            raise GraphError(f"expected 'p u v' line, got {line!r}")
        try:
            pairs.append((int(parts[1]), int(parts[2])))
        except ValueError:
            raise GraphError(f"bad pair line {line!r}") from None
    return PairSet(pairs, n)


def write_pairs(p: PairSet) -> str:
    if len(p) == 0:
        return "# empty pair set\n"
    return "\n".join(f"p {u} {v}" for u, v in p) + "\n"


def read_partial(text: str) -> dict[int, int]:
    """Partial coloring lines: '<edge-id> <color 0|1>'."""
    assigned: dict[int, int] = {}
    for line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad partial-coloring line {line!r}")
        try:
            e, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"bad partial-coloring line {line!r}") from None
        if e in assigned:
            raise GraphError(f"edge {e} assigned twice")
        assigned[e] = col
    return assigned


def write_partial(assigned: dict[int, int]) -> str:
    if not assigned:
        return "# empty partial coloring\n"
    return "\n".join(f"{e} {col}" for e, col in sorted(assigned.items())) + "\n"


def write_maps(maps: dict) -> str:
    """Flat 'kind src -> dst' lines from a (possibly nested) maps dict."""
    out = []
    for kind, value in maps.items():
        if isinstance(value, dict):
            for src, dst in value.items():
                out.append(f"{kind} {src} -> {dst}")
        elif isinstance(value, (list, tuple)):
            for i, dst in enumerate(value):
                out.append(f"{kind} {i} -> {dst}")
        else:
            out.append(f"{kind} - -> {value}")
    return "\n".join(out) + "\n"
