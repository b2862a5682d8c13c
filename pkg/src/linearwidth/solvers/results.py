from __future__ import annotations

from dataclasses import dataclass, field

from ..layouts import Layout, PathDecomposition


class SizeGuardError(ValueError):
    """Raised when an instance exceeds an engine's size guard."""

    def __init__(self, engine: str, quantity: str, value: int, limit: int):
        self.engine = engine
        self.quantity = quantity
        self.value = value
        self.limit = limit
        super().__init__(f"{engine}: {quantity}={value} exceeds guard {limit}")


@dataclass
class SearchStats:
    states_expanded: int = 0
    memo_entries: int = 0
    memo_hits: int = 0
    wall_time: float = 0.0
    # per bound k tried: number of memo entries (closure2n) or visited subsets (dp2m)
    per_k: dict[int, int] = field(default_factory=dict)
    distinct_states: int = 0


@dataclass
class SolveResult:
    engine: str
    width: int
    certificate: Layout | PathDecomposition
    stats: SearchStats = field(default_factory=SearchStats)
    extra: dict[str, int] = field(default_factory=dict)


def guard(engine: str, quantity: str, value: int, limit: int | None) -> None:
    if limit is not None and value > limit:
        raise SizeGuardError(engine, quantity, value, limit)
