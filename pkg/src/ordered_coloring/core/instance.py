"""List coloring instances and colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ordered_coloring.core.graph import OrderedGraph, build_graph, induced
from ordered_coloring.errors import GraphError

ColorList = FrozenSet[int]


@dataclass(frozen=True)
class Instance:
    """An ordered graph with one color list per vertex."""

    graph: OrderedGraph
    lists: Tuple[ColorList, ...]
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if len(self.lists) != self.graph.n:
            raise GraphError(
                f"expected {self.graph.n} lists, got {len(self.lists)}"
            )
        for v, lst in enumerate(self.lists):
            for c in lst:
                if not isinstance(c, int) or c < 1:
                    raise GraphError(f"color {c!r} at vertex {v} is not a positive integer")
                if self.k is not None and c > self.k:
                    raise GraphError(f"color {c} at vertex {v} exceeds k={self.k}")

    @property
    def n(self) -> int:
        """Vertex count."""
        return self.graph.n

    def palette(self) -> List[int]:
        """Sorted union of all lists."""
        return sorted(set().union(*self.lists)) if self.lists else []

    def max_list_size(self) -> int:
        """Largest list size (0 for the empty instance)."""
        return max((len(lst) for lst in self.lists), default=0)

    def with_lists(self, lists: Sequence[Iterable[int]]) -> "Instance":
        """Same graph, new lists."""
        return Instance(self.graph, tuple(frozenset(lst) for lst in lists), self.k)

    def with_graph(self, graph: OrderedGraph) -> "Instance":
        """Same lists on another graph with the same vertex count."""
        return Instance(graph, self.lists, self.k)

    def pinned(self, pins: Mapping[int, int]) -> "Instance":
        """Intersect the lists of pinned vertices with their pinned color."""
        lists = list(self.lists)
        for v, c in pins.items():
            lists[v] = lists[v] & {c}
        return Instance(self.graph, tuple(lists), self.k)

    def induced(self, vs: Sequence[int]) -> "Instance":
        """Induced sub-instance on a strictly increasing vertex list."""
        return Instance(induced(self.graph, vs), tuple(self.lists[v] for v in vs), self.k)

    def to_dict(self) -> dict:
        """Serializable form with deterministic field order."""
        return {
            "n": self.n,
            "edges": [list(e) for e in self.graph.edges()],
            "lists": [sorted(lst) for lst in self.lists],
        }


@dataclass(frozen=True)
class Coloring:
    """One color per vertex."""

    colors: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def to_dict(self) -> dict:
        """Serializable sat document."""
        return {"status": "sat", "colors": list(self.colors)}


def make_instance(
    n: int,
    edges: Iterable[Sequence[int]],
    lists: Sequence[Iterable[int]],
    k: Optional[int] = None,
) -> Instance:
    """Build an instance from plain Python values."""
    return Instance(build_graph(n, edges), tuple(frozenset(lst) for lst in lists), k)


def is_proper(inst: Instance, col: Coloring) -> bool:
    """Return True if col respects every list and no edge is monochromatic."""
    if len(col) != inst.n:
        raise GraphError(f"coloring has {len(col)} colors for {inst.n} vertices")
    colors = col.colors
    for v in range(inst.n):
        if colors[v] not in inst.lists[v]:
            return False
    return all(colors[u] != colors[v] for u, v in inst.graph.edges())
