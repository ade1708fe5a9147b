"""Colorings, pair sets and canonical (symmetry-broken) coloring enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, GraphError


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors 1..k to edge indices."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise GraphError("k must be >= 1")
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise GraphError(f"color {c} outside [1,{self.k}]")

    def color_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            classes.setdefault(c, []).append(i)
        return classes

    def used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class VertexColoring:
    """Total assignment of colors 1..k to vertices."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise GraphError("k must be >= 1")
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise GraphError(f"color {c} outside [1,{self.k}]")

    def color_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            classes.setdefault(c, []).append(i)
        return classes

    def used(self) -> int:
        return len(set(self.colors))


def check_edge_coloring(g: Graph, c: EdgeColoring) -> None:
    if len(c.colors) != g.m:
        raise GraphError(f"coloring covers {len(c.colors)} edges, graph has {g.m}")


def check_vertex_coloring(g: Graph, c: VertexColoring) -> None:
    if len(c.colors) != g.n:
        raise GraphError(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")


class PairSet:
    """Set of unordered pairs of distinct vertices."""

    def __init__(self, pairs, n: int | None = None):
        norm = []
        seen = set()
        for u, v in pairs:
            if u == v:
                raise GraphError(f"pair with equal endpoints ({u},{v})")
            if n is not None and not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"pair endpoint out of range: ({u},{v})")
            if u > v:
                u, v = v, u
            if (u, v) not in seen:
                seen.add((u, v))
                norm.append((u, v))
        self.pairs: tuple[tuple[int, int], ...] = tuple(sorted(norm))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        u, v = pair
        return (min(u, v), max(u, v)) in set(self.pairs)

    def __eq__(self, other):
        return isinstance(other, PairSet) and self.pairs == other.pairs

    @staticmethod
    def all_pairs(g: Graph) -> "PairSet":
        return PairSet(g.vertex_pairs(), g.n)


def canonical_colorings(num_items: int, k: int) -> Iterator[tuple[int, ...]]:
    """All canonical color tuples over `num_items` items with at most k colors.

    Canonical means first-use order: item 0 has color 1, and item i may use at
    most one more than the maximum color used before it.  Exactly one
    representative per color-permutation class, in lexicographic order.
    """
    if num_items == 0:
        yield ()
        return
    out = [1] * num_items

    def rec(i: int, max_used: int):
        if i == num_items:
            yield tuple(out)
            return
        for c in range(1, min(max_used + 1, k) + 1):
            out[i] = c
            yield from rec(i + 1, max(max_used, c))

    yield from rec(1, 1)


def canonical_edge_colorings(g: Graph, k: int) -> Iterator[EdgeColoring]:
    for t in canonical_colorings(g.m, k):
        yield EdgeColoring(colors=t, k=k)


def canonical_vertex_colorings(g: Graph, k: int) -> Iterator[VertexColoring]:
    for t in canonical_colorings(g.n, k):
        yield VertexColoring(colors=t, k=k)


def rainbow_edge_coloring(g: Graph) -> EdgeColoring:
    """All edges pairwise distinct colors."""
    m = max(g.m, 1)
    return EdgeColoring(colors=tuple(range(1, g.m + 1)), k=m)
