"""Ordered graph data model."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from ordered_coloring.errors import GraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class OrderedGraph:
    """Graph on vertices 0..n-1; the index order is the vertex order."""

    n: int
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")

    @property
    def vertices(self) -> range:
        """Vertices in order."""
        return range(self.n)

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def num_edges(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if uv is an edge."""
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Full neighborhood of v."""
        return self.adjacency[v]

    def forward_neighbors(self, v: int) -> FrozenSet[int]:
        """Neighbors that come after v."""
        self._check_vertex(v)
        return frozenset(u for u in self.adjacency[v] if u > v)

    def backward_neighbors(self, v: int) -> FrozenSet[int]:
        """Neighbors that come before v."""
        self._check_vertex(v)
        return frozenset(u for u in self.adjacency[v] if u < v)

    def is_independent(self, vs: Iterable[int]) -> bool:
        """Return True if no two vertices of vs are adjacent."""
        vs = list(vs)
        return all(u not in self.adjacency[v] for i, v in enumerate(vs) for u in vs[i + 1:])

    def is_clique(self, vs: Iterable[int]) -> bool:
        """Return True if vs is pairwise adjacent."""
        vs = list(vs)
        return all(u in self.adjacency[v] for i, v in enumerate(vs) for u in vs[i + 1:])

    def is_complete(self) -> bool:
        """Return True if every pair of vertices is adjacent."""
        return self.num_edges == self.n * (self.n - 1) // 2

    def without_edges(self, removed: Iterable[Edge]) -> "OrderedGraph":
        """Return a copy with the given edges deleted."""
        adjacency = [set(nbrs) for nbrs in self.adjacency]
        for u, v in removed:
            adjacency[u].discard(v)
            adjacency[v].discard(u)
        return OrderedGraph(self.n, tuple(frozenset(a) for a in adjacency))

    def to_dict(self) -> dict:
        """Serializable form."""
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> OrderedGraph:
    """Build an ordered graph; duplicate pairs collapse."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adjacency: List[set] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return OrderedGraph(n, tuple(frozenset(a) for a in adjacency))


def complete_graph(n: int) -> OrderedGraph:
    """K_n in index order."""
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> OrderedGraph:
    """C_n with vertices in cycle order."""
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def induced(g: OrderedGraph, vs: Sequence[int]) -> OrderedGraph:
    """Induced ordered subgraph on a strictly increasing vertex list."""
    vs = list(vs)
    for a, b in zip(vs, vs[1:]):
        if a >= b:
            raise GraphError("vertex list must be strictly increasing")
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise GraphError("vertex list out of range")
    position = {v: i for i, v in enumerate(vs)}
    adjacency = tuple(
        frozenset(position[u] for u in g.adjacency[v] if u in position) for v in vs
    )
    return OrderedGraph(len(vs), adjacency)


def forward_neighbors(g: OrderedGraph, v: int) -> FrozenSet[int]:
    """N+(v)."""
    return g.forward_neighbors(v)


def backward_neighbors(g: OrderedGraph, v: int) -> FrozenSet[int]:
    """N-(v)."""
    return g.backward_neighbors(v)


def reverse(g: OrderedGraph) -> OrderedGraph:
    """Reverse the vertex order: vertex i becomes n-1-i."""
    last = g.n - 1
    return OrderedGraph(
        g.n, tuple(frozenset(last - u for u in g.adjacency[last - v]) for v in range(g.n))
    )
