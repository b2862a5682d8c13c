from __future__ import annotations

import time
from itertools import permutations

from ..graph_core import Graph
from ..layouts import Layout
from .results import SearchStats, SolveResult, guard

BRUTE_MAX_EDGES = 9


def lw_bruteforce(g: Graph, max_edges: int | None = BRUTE_MAX_EDGES) -> SolveResult:
    """Minimum layout width over all ``m!`` edge orders (reference oracle)."""
    guard("brute", "m", g.m, max_edges)
    start = time.perf_counter()
    inc = g.incident
    best, best_order, count = None, (), 0
    for order in permutations(range(g.m)):
        count += 1
        prefix = 0
        width = 0
        for e in order:
            prefix |= 1 << e
            w = 0
            for inc_v in inc:
                x = prefix & inc_v
                if x and x != inc_v:
                    w += 1
            if w > width:
                width = w
                if best is not None and width >= best:
                    break
        if best is None or width < best:
            best, best_order = width, order
    stats = SearchStats(states_expanded=count, wall_time=time.perf_counter() - start)
    return SolveResult("brute", best or 0, Layout(best_order), stats)


def decide_bruteforce(g: Graph, k: int, max_edges: int | None = BRUTE_MAX_EDGES) -> Layout | None:
    """Some layout of width at most ``k``, or ``None``."""
    res = lw_bruteforce(g, max_edges)
    return res.certificate if res.width <= k else None
