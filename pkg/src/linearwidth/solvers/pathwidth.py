"""Exact pathwidth via vertex separation number over vertex subsets."""

from __future__ import annotations

import time

import numba as nb
import numpy as np

from ..graph_core import Graph, bits
from ..layouts import PathDecomposition, pd_width
from .results import SearchStats, SolveResult, guard

PW_MAX_VERTICES = 26


@nb.njit(cache=True)
def _vsn_table(nbrs, n):
    size = np.int64(1) << n
    table = np.empty(size, np.uint8)
    table[0] = 0
    full = size - 1
    for s in range(1, size):
        outside = full & ~s
        boundary = 0
        best = 255
        t = s
        while t:
            low = t & -t
            v = 0
            while (np.int64(1) << v) != low:
                v += 1
            if nbrs[v] & outside:
                boundary += 1
            if table[s ^ low] < best:
                best = table[s ^ low]
            t ^= low
        table[s] = boundary if boundary > best else best
    return table


def vertex_order_to_pd(g: Graph, order: list[int]) -> PathDecomposition:
    """Bag ``i``: vertex ``order[i]`` plus earlier vertices that still have a later neighbour."""
    bags = []
    placed = 0
    for v in order:
        boundary = 0
        for u in range(g.n):
            if placed >> u & 1 and g.neighbors[u] & ~placed:
                boundary |= 1 << u
        bags.append(boundary | 1 << v)
        placed |= 1 << v
    return PathDecomposition(tuple(bags))


def vertex_separation(g: Graph, order: list[int]) -> int:
    width = 0
    placed = 0
    for v in order:
        placed |= 1 << v
        count = sum(1 for u in range(g.n) if placed >> u & 1 and g.neighbors[u] & ~placed)
        width = max(width, count)
    return width


def pw_exact(g: Graph, max_vertices: int | None = PW_MAX_VERTICES) -> SolveResult:
    guard("pw", "n", g.n, max_vertices)
    if g.n == 0:
        raise ValueError("pathwidth is undefined for the graph with no vertices")
    start = time.perf_counter()
    nbrs = np.array(g.neighbors, np.int64)
    table = _vsn_table(nbrs, np.int64(g.n))
    s = g.all_vertices
    width = int(table[s])
    reverse = []
    while s:
        v = min(bits(s), key=lambda x: int(table[s ^ (1 << x)]))
        reverse.append(v)
        s ^= 1 << v
    order = reverse[::-1]
    pd = vertex_order_to_pd(g, order)
    assert pd_width(pd) == width
    stats = SearchStats(states_expanded=len(table), wall_time=time.perf_counter() - start)
    return SolveResult("pw", width, pd, stats)

