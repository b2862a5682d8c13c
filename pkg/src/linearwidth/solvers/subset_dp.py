"""Baseline linearwidth engine: dynamic programming over edge subsets.

For a bound ``k`` the subsets ``F`` admitting a partial layout of width at
most ``k`` are those reachable from the empty set by single-edge additions
that keep ``d <= k``.  The engine tries ``k = 0, 1, ...`` and, for each,
explores that reachable part of the ``2^m`` lattice depth-first, recording
for every reached subset the edge that was added last so a layout can be
read back from ``E``.

Masks up to 62 edges run in a compiled kernel over an open-addressing hash
table; wider graphs fall back to the same search on Python ints.
"""

from __future__ import annotations

import time

import numba as nb
import numpy as np

from ..graph_core import Graph
from ..layouts import Layout
from .results import SearchStats, SolveResult, guard

DP2M_MAX_EDGES = 28
KERNEL_MAX_EDGES = 62

_EMPTY = np.int64(-1)


@nb.njit(cache=True)
def _slot(keys, key):
    mask = keys.shape[0] - 1
    j = ((key * np.int64(-7046029254386353131)) >> np.int64(17)) & mask
    while keys[j] != _EMPTY and keys[j] != key:
        j = (j + 1) & mask
    return j


@nb.njit(cache=True)
def _search_kernel(k, ends_u, ends_v, incident, m):
    full = (np.int64(1) << m) - 1
    keys = np.full(1 << 10, _EMPTY, np.int64)
    last = np.empty(1 << 10, np.int8)
    j = _slot(keys, np.int64(0))
    keys[j] = 0
    last[j] = -1
    size = 1
    stack_f = np.empty(256, np.int64)
    stack_d = np.empty(256, np.int64)
    stack_f[0] = 0
    stack_d[0] = 0
    top = 1
    found = m == 0
    while top > 0 and not found:
        top -= 1
        f = stack_f[top]
        df = stack_d[top]
        for i in range(m):
            bit = np.int64(1) << i
            if f & bit:
                continue
            g = f | bit
            dg = df
            for w in (ends_u[i], ends_v[i]):
                inc = incident[w]
                if f & inc == 0:
                    if g & inc != inc:
                        dg += 1
                elif g & inc == inc:
                    dg -= 1
            if dg > k:
                continue
            j = _slot(keys, g)
            if keys[j] == g:
                continue
            keys[j] = g
            last[j] = i
            size += 1
            if g == full:
                found = True
                break
            if 2 * size > keys.shape[0]:
                new_keys = np.full(2 * keys.shape[0], _EMPTY, np.int64)
                new_last = np.empty(2 * keys.shape[0], np.int8)
                for s in range(keys.shape[0]):
                    if keys[s] != _EMPTY:
                        t = _slot(new_keys, keys[s])
                        new_keys[t] = keys[s]
                        new_last[t] = last[s]
                keys = new_keys
                last = new_last
            if top == stack_f.shape[0]:
                stack_f = np.concatenate((stack_f, np.empty_like(stack_f)))
                stack_d = np.concatenate((stack_d, np.empty_like(stack_d)))
            stack_f[top] = g
            stack_d[top] = dg
            top += 1
    order = np.empty(m if found else 0, np.int64)
    if found:
        f = full
        for pos in range(m - 1, -1, -1):
            e = last[_slot(keys, f)]
            order[pos] = e
            f ^= np.int64(1) << e
    return found, size, order


def _search_python(g: Graph, k: int):
    m = g.m
    full = (1 << m) - 1
    incident = g.incident
    ends = g.edges
    last = {0: -1}
    if m == 0:
        return True, 1, []
    stack = [(0, 0)]
    found = False
    while stack and not found:
        f, df = stack.pop()
        for i in range(m):
            bit = 1 << i
            if f & bit:
                continue
            h = f | bit
            if h in last:
                continue
            dh = df
            for w in ends[i]:
                inc = incident[w]
                if not f & inc:
                    if h & inc != inc:
                        dh += 1
                elif h & inc == inc:
                    dh -= 1
            if dh > k:
                continue
            last[h] = i
            if h == full:
                found = True
                break
            stack.append((h, dh))
    if not found:
        return False, len(last), []
    order = []
    f = full
    while f:
        e = last[f]
        order.append(e)
        f ^= 1 << e
    order.reverse()
    return True, len(last), order


def subset_search(g: Graph, k: int, use_kernel: bool | None = None):
    """Decide whether some layout has width at most ``k``.

    Returns ``(found, visited_subsets, order)`` with ``order`` a layout when found.
    """
    if use_kernel is None:
        use_kernel = g.m <= KERNEL_MAX_EDGES
    if not use_kernel:
        return _search_python(g, k)
    if g.m > KERNEL_MAX_EDGES:
        raise ValueError(f"kernel handles at most {KERNEL_MAX_EDGES} edges")
    ends_u = np.array([u for u, _ in g.edges], np.int64)
    ends_v = np.array([v for _, v in g.edges], np.int64)
    incident = np.array(g.incident, np.int64) if g.n else np.zeros(1, np.int64)
    found, size, order = _search_kernel(np.int64(k), ends_u, ends_v, incident, np.int64(g.m))
    return bool(found), int(size), [int(e) for e in order]


def lw_dp_2m(g: Graph, max_edges: int | None = DP2M_MAX_EDGES,
             use_kernel: bool | None = None) -> SolveResult:
    guard("dp2m", "m", g.m, max_edges)
    start = time.perf_counter()
    stats = SearchStats()
    for k in range(g.n + 1):
        found, size, order = subset_search(g, k, use_kernel)
        stats.per_k[k] = size
        stats.states_expanded += size
        if found:
            stats.distinct_states = size
            stats.wall_time = time.perf_counter() - start
            return SolveResult("dp2m", k, Layout(tuple(order)), stats)
    raise AssertionError("no layout within width n; boundary sizes are bounded by n")


def decide_dp_2m(g: Graph, k: int, max_edges: int | None = DP2M_MAX_EDGES) -> Layout | None:
    guard("dp2m", "m", g.m, max_edges)
    found, _, order = subset_search(g, k)
    return Layout(tuple(order)) if found else None
