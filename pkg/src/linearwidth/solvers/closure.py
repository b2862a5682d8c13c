"""Exact linearwidth by memoized search over closed edge sets.

A closed edge set is the edge set of an induced subgraph, so it is determined
by its vertex set; there are at most ``2^n`` of them.  Appending an edge
whose endpoints are already covered never enlarges the boundary, so such
edges can be committed immediately without losing any layout of width
``k``.  The search therefore only branches on edges that reach a new vertex,
jumps straight to the closure of the result, and remembers (per ``k``) the
vertex sets from which every continuation failed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..graph_core import EdgeSet, Graph, VertexSet, bits, components, induced_edges, vertices_of
from ..layouts import Layout
from .results import SearchStats, SolveResult, guard

CLOSURE_MAX_VERTICES = 64


@dataclass
class MemoTable:
    """Vertex sets of closed edge sets refuted at one bound ``k``."""

    refuted: set[VertexSet] = field(default_factory=set)
    hits: int = 0

    def __len__(self):
        return len(self.refuted)


class _Search:
    def __init__(self, g: Graph, k: int, memo: MemoTable):
        self.g = g
        self.k = k
        self.memo = memo
        self.expanded = 0
        self.seen: set[VertexSet] = set()
        self.path: list[int] = []  # branching edges of the accepting path, innermost first
        self.target = 0
        for v, deg in enumerate(g.degree):
            if deg:
                self.target |= 1 << v
        self.high_degree = 0
        for v, deg in enumerate(g.degree):
            if deg >= 2:
                self.high_degree |= 1 << v

    def extendable(self, s: VertexSet) -> bool:
        if s & self.target == self.target:
            return True
        memo = self.memo
        if s in memo.refuted:
            memo.hits += 1
            return False
        self.expanded += 1
        self.seen.add(s)
        g, k = self.g, self.k
        nbrs = g.neighbors
        outside = ~s
        boundary = 0
        for w in bits(s):
            if nbrs[w] & outside:
                boundary |= 1 << w
        base = boundary.bit_count()
        high = self.high_degree
        moves = []
        for i, em in enumerate(g.endpoints):
            if not em & outside:
                continue
            u, v = g.edges[i]
            value = base
            if s >> u & 1:
                if nbrs[u] & outside == 1 << v:
                    value -= 1
            elif high >> u & 1:
                value += 1
            if s >> v & 1:
                if nbrs[v] & outside == 1 << u:
                    value -= 1
            elif high >> v & 1:
                value += 1
            if value <= k:
                moves.append((value, i))
        moves.sort()
        ends = g.endpoints
        for _, i in moves:
            if self.extendable(s | ends[i]):
                self.path.append(i)
                return True
        memo.refuted.add(s)
        return False


def is_extendable(g: Graph, k: int, f: EdgeSet = 0, memo: MemoTable | None = None) -> bool:
    """Whether some layout of width at most ``k`` starts with the closed set ``f``."""
    s = vertices_of(g, f)
    if induced_edges(g, s) != f:
        raise ValueError("f must be closed (the edge set of an induced subgraph)")
    return _Search(g, k, memo if memo is not None else MemoTable()).extendable(s)


def _expand(g: Graph, path: list[int]) -> list[int]:
    """Turn branching edges into a full layout, appending closure edges by index."""
    order = []
    s = 0
    covered = 0
    for e in path:
        s |= g.endpoints[e]
        order.append(e)
        covered |= 1 << e
        closed = induced_edges(g, s)
        order.extend(bits(closed & ~covered))
        covered = closed
    return order


def lower_bound(g: Graph) -> int:
    """``min_e d({e})`` when ``m >= 2``, else 0: every layout starts with one edge."""
    if g.m < 2:
        return 0
    deg = g.degree
    return min((deg[u] >= 2) + (deg[v] >= 2) for u, v in g.edges)


def _solve_connected(g: Graph, stats: SearchStats, lo: int | None = None):
    """Width and layout for one component, trying ``k = lo, lo+1, ...``."""
    seen: set[VertexSet] = set()
    start = lower_bound(g) if lo is None else lo
    for k in range(start, g.n + 1):
        memo = MemoTable()
        search = _Search(g, k, memo)
        ok = search.extendable(0)
        seen |= search.seen
        stats.per_k[k] = stats.per_k.get(k, 0) + len(memo)
        stats.memo_entries += len(memo)
        stats.memo_hits += memo.hits
        stats.states_expanded += search.expanded
        if ok:
            stats.distinct_states += len(seen)
            return k, _expand(g, search.path[::-1])
    raise AssertionError("no layout within width n; boundary sizes are bounded by n")


def lw_closure_2n(g: Graph, max_vertices: int | None = CLOSURE_MAX_VERTICES) -> SolveResult:
    guard("closure2n", "n", g.n, min(max_vertices or CLOSURE_MAX_VERTICES, CLOSURE_MAX_VERTICES))
    start = time.perf_counter()
    stats = SearchStats()
    width = 0
    order: list[int] = []
    for comp in components(g):
        if comp.graph.m == 0:
            continue
        w, local = _solve_connected(comp.graph, stats)
        width = max(width, w)
        order.extend(comp.edge_map[e] for e in local)
    stats.wall_time = time.perf_counter() - start
    return SolveResult("closure2n", width, Layout(tuple(order)), stats)


def decide_closure(g: Graph, k: int, max_vertices: int | None = CLOSURE_MAX_VERTICES) -> Layout | None:
    guard("closure2n", "n", g.n, min(max_vertices or CLOSURE_MAX_VERTICES, CLOSURE_MAX_VERTICES))
    order: list[int] = []
    for comp in components(g):
        if comp.graph.m == 0:
            continue
        search = _Search(comp.graph, k, MemoTable())
        if not search.extendable(0):
            return None
        order.extend(comp.edge_map[e] for e in _expand(comp.graph, search.path[::-1]))
    return Layout(tuple(order))
