"""Partial layouts and an exhaustive check of the edge-commitment rule."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..boundary import d
from ..graph_core import EdgeSet, Graph


class PrunePreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class PartialLayout:
    prefix: tuple[int, ...]

    @property
    def edges(self) -> EdgeSet:
        out = 0
        for e in self.prefix:
            out |= 1 << e
        return out

    def widths(self, g: Graph) -> list[int]:
        out = []
        f = 0
        for e in self.prefix:
            f |= 1 << e
            out.append(d(g, f))
        return out

    def width(self, g: Graph) -> int:
        return max(self.widths(g), default=0)

    def append(self, e: int) -> "PartialLayout":
        return PartialLayout(self.prefix + (e,))


def completable(g: Graph, f: EdgeSet, k: int) -> bool:
    """Whether the edges outside ``f`` can be appended one by one keeping ``d <= k``."""
    full = g.all_edges

    @lru_cache(maxsize=None)
    def go(cur: EdgeSet) -> bool:
        if cur == full:
            return True
        rest = full & ~cur
        while rest:
            bit = rest & -rest
            rest ^= bit
            if d(g, cur | bit) <= k and go(cur | bit):
                return True
        return False

    return go(f)


def is_k_extendable(g: Graph, sigma: PartialLayout, k: int) -> bool:
    if len(set(sigma.prefix)) != len(sigma.prefix):
        raise ValueError("partial layout repeats an edge")
    return sigma.width(g) <= k and completable(g, sigma.edges, k)


def check_prune_lemma(g: Graph, sigma: PartialLayout, e: int, k: int) -> bool:
    """Whether ``sigma`` and ``sigma + e`` agree on ``k``-extendability.

    Requires ``sigma`` of width at most ``k``, ``e`` outside it and
    ``d(F) >= d(F + e)``; both sides are decided by exhaustive search.
    """
    f = sigma.edges
    if sigma.width(g) > k:
        raise PrunePreconditionError(f"partial layout has width {sigma.width(g)} > {k}")
    if not 0 <= e < g.m or f >> e & 1:
        raise PrunePreconditionError(f"edge {e} is not outside the partial layout")
    if d(g, f) < d(g, f | 1 << e):
        raise PrunePreconditionError(
            f"appending edge {e} grows the boundary: d(F)={d(g, f)} < {d(g, f | 1 << e)}")
    return is_k_extendable(g, sigma, k) == is_k_extendable(g, sigma.append(e), k)
