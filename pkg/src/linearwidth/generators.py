"""Deterministic graph families for tests and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph_core import Graph


def gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return Graph(n, tuple(pair for pair in combinations(range(n), 2) if rng.random() < p))


def gnm(n: int, m: int, seed: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"cannot place {m} edges on {n} vertices")
    rng = random.Random(seed)
    return Graph(n, tuple(sorted(rng.sample(pairs, m))))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def clique(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def star(n: int) -> Graph:
    """Vertex 0 joined to ``n - 1`` leaves."""
    return Graph(n, tuple((0, i) for i in range(1, n)))


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, tuple(edges))


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
