"""Edge layouts, path decompositions, their widths, and conversions between them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .boundary import BoundaryEvaluator, mid
from .graph_core import Graph, VertexSet, bits, is_connected, mask_of


class InvalidLayoutError(ValueError):
    pass


class InvalidDecompositionError(ValueError):
    pass


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Layout:
    """Total order on the edges; ``order[i]`` is the edge placed at position ``i + 1``."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(e) for e in self.order))

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[VertexSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(int(b) for b in self.bags))

    @classmethod
    def from_lists(cls, bags: Sequence[Sequence[int]]) -> "PathDecomposition":
        return cls(tuple(mask_of(b) for b in bags))

    def as_lists(self) -> list[list[int]]:
        return [list(bits(b)) for b in self.bags]


class LayoutCheck(NamedTuple):
    ok: bool
    prefix: int | None = None  # 1-based length of the first prefix over the bound
    value: int | None = None  # d of that prefix


class DecompositionCheck(NamedTuple):
    ok: bool
    condition: str | None = None  # "vertex-coverage" | "edge-coverage" | "consecutiveness"
    detail: str = ""


def check_layout(g: Graph, pi: Layout) -> None:
    if sorted(pi.order) != list(range(g.m)):
        raise InvalidLayoutError(f"layout is not a permutation of the {g.m} edges")


def prefix_widths(g: Graph, pi: Layout) -> list[int]:
    """``d`` of every nonempty prefix of ``pi``."""
    check_layout(g, pi)
    ev = BoundaryEvaluator(g)
    return [ev.add(e) for e in pi.order]


def layout_width(g: Graph, pi: Layout) -> int:
    return max(prefix_widths(g, pi), default=0)


def verify_layout(g: Graph, pi: Layout, k: int) -> LayoutCheck:
    for i, value in enumerate(prefix_widths(g, pi), 1):
        if value > k:
            return LayoutCheck(False, i, value)
    return LayoutCheck(True)


def pd_width(pd: PathDecomposition) -> int:
    if not pd.bags:
        raise InvalidDecompositionError("decomposition has no bags")
    return max(b.bit_count() for b in pd.bags) - 1


def verify_path_decomposition(g: Graph, pd: PathDecomposition) -> DecompositionCheck:
    full = g.all_vertices
    union = 0
    for b in pd.bags:
        if b & ~full:
            return DecompositionCheck(False, "vertex-coverage", "bag holds a vertex outside the graph")
        union |= b
    if union != full:
        missing = list(bits(full & ~union))
        return DecompositionCheck(False, "vertex-coverage", f"vertices {missing} in no bag")
    for i, em in enumerate(g.endpoints):
        if not any(em & b == em for b in pd.bags):
            return DecompositionCheck(False, "edge-coverage", f"edge {i} {g.edges[i]} in no bag")
    for v in range(g.n):
        hits = [i for i, b in enumerate(pd.bags) if b >> v & 1]
        if hits[-1] - hits[0] + 1 != len(hits):
            return DecompositionCheck(False, "consecutiveness", f"vertex {v} occurs in bags {hits}")
    return DecompositionCheck(True)


def layout_to_pd(g: Graph, pi: Layout, simplify: bool = False) -> PathDecomposition:
    """One bag per position: the boundary of the preceding prefix plus the endpoints of the edge.

    For connected graphs other than K1 and K2 the result is a valid
    decomposition of width at most the layout's width.  K2 comes out as the
    single bag ``{a, b}`` (width 1 against layout width 0).
    """
    check_layout(g, pi)
    if not is_connected(g):
        raise DisconnectedGraphError("layout_to_pd needs a connected graph; split components first")
    if g.m == 0:
        return PathDecomposition((g.all_vertices,))
    bags = []
    prefix = 0
    for e in pi.order:
        bags.append(mid(g, prefix) | g.endpoints[e])
        prefix |= 1 << e
    pd = PathDecomposition(tuple(bags))
    return simplify_pd(pd) if simplify else pd


def simplify_pd(pd: PathDecomposition) -> PathDecomposition:
    """Drop bags that are contained in a neighbouring bag."""
    bags = list(pd.bags)
    changed = True
    while changed:
        changed = False
        for i, b in enumerate(bags):
            left = bags[i - 1] if i > 0 else None
            right = bags[i + 1] if i + 1 < len(bags) else None
            if (left is not None and b & left == b) or (right is not None and b & right == b):
                del bags[i]
                changed = True
                break
    return PathDecomposition(tuple(bags))


def pd_to_layout(g: Graph, pd: PathDecomposition) -> Layout:
    """Order edges by the first bag containing both endpoints, ties by edge index.

    Every vertex on the boundary of a prefix lies in the bag currently being
    emptied, so the width is at most ``pd_width(pd) + 1``.
    """
    check = verify_path_decomposition(g, pd)
    if not check.ok:
        raise InvalidDecompositionError(f"{check.condition}: {check.detail}")
    first = []
    for em in g.endpoints:
        first.append(next(i for i, b in enumerate(pd.bags) if em & b == em))
    return Layout(tuple(sorted(range(g.m), key=lambda e: (first[e], e))))


def format_layout(pi: Layout) -> str:
    return " ".join(str(e + 1) for e in pi.order)


def parse_layout(line: str) -> Layout:
    try:
        return Layout(tuple(int(tok) - 1 for tok in line.split()))
    except ValueError:
        raise InvalidLayoutError(f"non-integer edge label in {line!r}") from None


def format_pd(g: Graph, pd: PathDecomposition) -> list[str]:
    return [" ".join(str(g.labels[v]) for v in bits(b)) for b in pd.bags]


def parse_pd(g: Graph, lines: Sequence[str]) -> PathDecomposition:
    """Parse bags written with the graph's original vertex labels."""
    index = {label: v for v, label in enumerate(g.labels)}
    bags = []
    for line in lines:
        mask = 0
        for tok in line.split():
            try:
                mask |= 1 << index[int(tok)]
            except (KeyError, ValueError):
                raise InvalidDecompositionError(f"unknown vertex label {tok!r}") from None
        bags.append(mask)
    return PathDecomposition(tuple(bags))
