from __future__ import annotations

import time

from ..graph_core import Graph, components
from ..layouts import Layout, layout_width, pd_to_layout
from .pathwidth import PW_MAX_VERTICES, pw_exact
from .results import SearchStats, SolveResult, guard


def lw_approx(g: Graph, max_vertices: int | None = PW_MAX_VERTICES) -> SolveResult:
    """Layout of width at most ``lw + 1`` built from an optimal path decomposition.

    Components with at most two vertices have linearwidth 0 and are laid out
    directly; every other component goes through ``pw_exact`` and
    ``pd_to_layout``.  The reported width is the exact width of the layout.
    """
    guard("approx", "n", g.n, max_vertices)
    start = time.perf_counter()
    stats = SearchStats()
    order: list[int] = []
    pathwidth = 0
    for comp in components(g):
        sub = comp.graph
        if sub.n <= 2:
            local = Layout(tuple(range(sub.m)))
        else:
            pw = pw_exact(sub, max_vertices=None)
            pathwidth = max(pathwidth, pw.width)
            stats.states_expanded += pw.stats.states_expanded
            local = pd_to_layout(sub, pw.certificate)
        order.extend(comp.edge_map[e] for e in local.order)
    layout = Layout(tuple(order))
    stats.wall_time = time.perf_counter() - start
    return SolveResult("approx", layout_width(g, layout), layout, stats, {"pathwidth": pathwidth})
