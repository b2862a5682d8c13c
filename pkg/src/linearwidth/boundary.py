"""Edge-boundary function ``mid``/``d``, closures and the submodularity check."""

from __future__ import annotations

from .graph_core import EdgeSet, Graph, VertexSet, bits, induced_edges, vertices_of


class SubmodularityPreconditionError(ValueError):
    pass


def mid(g: Graph, f: EdgeSet) -> VertexSet:
    """Vertices with at least one incident edge inside ``f`` and one outside."""
    out = 0
    for v, inc in enumerate(g.incident):
        x = f & inc
        if x and x != inc:
            out |= 1 << v
    return out


def mid_by_definition(g: Graph, f: EdgeSet) -> VertexSet:
    """``V(f) & V(E - f)``; slower reference form of :func:`mid`."""
    return vertices_of(g, f) & vertices_of(g, g.all_edges & ~f)


def d(g: Graph, f: EdgeSet) -> int:
    count = 0
    for inc in g.incident:
        x = f & inc
        if x and x != inc:
            count += 1
    return count


def closure(g: Graph, f: EdgeSet) -> EdgeSet:
    """All edges of the subgraph induced by ``V(f)``."""
    return induced_edges(g, vertices_of(g, f))


def check_submodularity(g: Graph, x: EdgeSet, y: EdgeSet, e: int) -> bool:
    """Whether ``d(x+e) - d(x) >= d(y+e) - d(y)`` holds for ``x <= y``, ``e`` not in ``y``."""
    if x & ~y:
        raise SubmodularityPreconditionError("x is not a subset of y")
    if not 0 <= e < g.m:
        raise SubmodularityPreconditionError(f"edge index {e} out of range")
    b = 1 << e
    if y & b:
        raise SubmodularityPreconditionError(f"edge {e} already in y")
    return d(g, x | b) - d(g, x) >= d(g, y | b) - d(g, y)


class BoundaryEvaluator:
    """Tracks ``d(F)`` for a mutable edge set ``F`` with O(1) updates per edge.

    Keeps per-vertex counts of incident edges inside ``F``; a vertex
    straddles the boundary iff ``0 < count < degree``.  Not thread-safe.
    """

    def __init__(self, g: Graph, f: EdgeSet = 0):
        self.graph = g
        self.edges = 0
        self.counts = [0] * g.n
        self.value = 0
        for i in bits(f):
            self.add(i)

    def _straddles(self, v: int) -> bool:
        return 0 < self.counts[v] < self.graph.degree[v]

    def _bump(self, v: int, step: int) -> None:
        before = self._straddles(v)
        self.counts[v] += step
        self.value += self._straddles(v) - before

    def add(self, e: int) -> int:
        b = 1 << e
        if self.edges & b:
            raise ValueError(f"edge {e} already present")
        self.edges |= b
        u, v = self.graph.edges[e]
        self._bump(u, 1)
        self._bump(v, 1)
        return self.value

    def remove(self, e: int) -> int:
        b = 1 << e
        if not self.edges & b:
            raise ValueError(f"edge {e} not present")
        self.edges &= ~b
        u, v = self.graph.edges[e]
        self._bump(u, -1)
        self._bump(v, -1)
        return self.value

    def peek_add(self, e: int) -> int:
        """``d(F + e)`` without modifying the tracked set."""
        u, v = self.graph.edges[e]
        deg, cnt = self.graph.degree, self.counts
        delta = 0
        for w in (u, v):
            c = cnt[w]
            delta += (0 < c + 1 < deg[w]) - (0 < c < deg[w])
        return self.value + delta

    @property
    def mid(self) -> VertexSet:
        out = 0
        for v in range(self.graph.n):
            if self._straddles(v):
                out |= 1 << v
        return out
