"""Graph representation, edge-list I/O and component splitting.

Vertex and edge subsets are plain ``int`` bit masks: bit ``i`` of a
``VertexSet`` is vertex ``i`` and bit ``j`` of an ``EdgeSet`` is edge ``j``.
Python ints give O(1) union/intersection and ``int.bit_count`` for popcount.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

VertexSet = int
EdgeSet = int

MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Base class for edge-list parsing and graph construction errors."""


class MalformedLineError(GraphFormatError):
    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class TooManyVerticesError(GraphFormatError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``labels[v]`` is the 1-based label vertex ``v`` carried in the input
    document; it is only used for I/O.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[int, ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    degree: tuple[int, ...] = field(init=False, repr=False, compare=False)
    incident: tuple[EdgeSet, ...] = field(init=False, repr=False, compare=False)
    neighbors: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)
    endpoints: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        if n > MAX_VERTICES:
            raise TooManyVerticesError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        labels = tuple(self.labels) if self.labels else tuple(range(1, n + 1))
        if len(labels) != n:
            raise GraphFormatError("labels must have one entry per vertex")

        adjacency = [[] for _ in range(n)]
        neighbors = [0] * n
        incident = [0] * n
        for i, (u, v) in enumerate(edges):
            adjacency[u].append(i)
            adjacency[v].append(i)
            neighbors[u] |= 1 << v
            neighbors[v] |= 1 << u
            incident[u] |= 1 << i
            incident[v] |= 1 << i
        setattr_ = object.__setattr__
        setattr_(self, "edges", edges)
        setattr_(self, "labels", labels)
        setattr_(self, "adjacency", tuple(tuple(a) for a in adjacency))
        setattr_(self, "degree", tuple(len(a) for a in adjacency))
        setattr_(self, "incident", tuple(incident))
        setattr_(self, "neighbors", tuple(neighbors))
        setattr_(self, "endpoints", tuple((1 << u) | (1 << v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def all_edges(self) -> EdgeSet:
        return (1 << self.m) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def vertices_of(g: Graph, f: EdgeSet) -> VertexSet:
    """Union of the endpoints of the edges in ``f``."""
    out = 0
    ends = g.endpoints
    for i in bits(f):
        out |= ends[i]
    return out


def induced_edges(g: Graph, vs: VertexSet) -> EdgeSet:
    """Edges with both endpoints in ``vs``."""
    out = 0
    for i, em in enumerate(g.endpoints):
        if em & vs == em:
            out |= 1 << i
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _reach(g, 0) == g.all_vertices


def _reach(g: Graph, start: int) -> VertexSet:
    seen = 1 << start
    queue = deque([start])
    nbrs = g.neighbors
    while queue:
        v = queue.popleft()
        fresh = nbrs[v] & ~seen
        seen |= fresh
        queue.extend(bits(fresh))
    return seen


@dataclass(frozen=True)
class Component:
    """A connected component with index maps back into the parent graph."""

    graph: Graph
    vertex_map: tuple[int, ...]  # local vertex -> parent vertex
    edge_map: tuple[int, ...]  # local edge -> parent edge


def components(g: Graph) -> list[Component]:
    """Split ``g`` into connected components, ordered by smallest vertex."""
    out = []
    remaining = g.all_vertices
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach(g, start)
        remaining &= ~comp
        vmap = tuple(bits(comp))
        local = {v: i for i, v in enumerate(vmap)}
        emap = tuple(bits(induced_edges(g, comp)))
        sub = Graph(
            len(vmap),
            tuple((local[g.edges[e][0]], local[g.edges[e][1]]) for e in emap),
            tuple(g.labels[v] for v in vmap),
        )
        out.append(Component(sub, vmap, emap))
    return out


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document (``p <n> <m>`` header, ``e <u> <v>`` lines).

    Vertices are relabeled ``0..n-1`` in order of first appearance in the
    edge lines; labels that never appear follow in ascending order.
    """
    n = m = None
    raw: list[tuple[int, int, int, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise MalformedLineError(lineno, line, "second header line")
            nums = parts[1:]
            if len(nums) == 3 and not nums[0].lstrip("-").isdigit():
                nums = nums[1:]  # tolerate DIMACS "p edge n m"
            if len(nums) != 2:
                raise MalformedLineError(lineno, line, "expected 'p <n> <m>'")
            try:
                n, m = int(nums[0]), int(nums[1])
            except ValueError:
                raise MalformedLineError(lineno, line, "non-integer header field") from None
            if n < 0 or m < 0:
                raise MalformedLineError(lineno, line, "negative header field")
            if n > MAX_VERTICES:
                raise TooManyVerticesError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        elif tag == "e":
            if n is None:
                raise MalformedLineError(lineno, line, "edge before header")
            if len(parts) != 3:
                raise MalformedLineError(lineno, line, "expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise MalformedLineError(lineno, line, "non-integer vertex label") from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise MalformedLineError(lineno, line, f"vertex label {x} outside 1..{n}")
            raw.append((u, v, lineno, line))
        else:
            raise MalformedLineError(lineno, line, f"unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(raw) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(raw)} were given")

    index: dict[int, int] = {}
    for u, v, _, _ in raw:
        for x in (u, v):
            if x not in index:
                index[x] = len(index)
    for x in range(1, n + 1):
        if x not in index:
            index[x] = len(index)
    labels = [0] * n
    for label, i in index.items():
        labels[i] = label

    edges = []
    seen = set()
    for u, v, lineno, line in raw:
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {u}: {line!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {u}-{v}: {line!r}")
        seen.add(key)
        edges.append((index[u], index[v]))
    return Graph(n, tuple(edges), tuple(labels))


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lab = g.labels
    lines.extend(f"e {lab[u]} {lab[v]}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())
