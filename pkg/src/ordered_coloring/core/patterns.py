"""Forbidden ordered patterns and induced-subgraph detection."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ordered_coloring.core.graph import OrderedGraph, build_graph, reverse
from ordered_coloring.errors import PreconditionError

Witness = Tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    """A named small ordered graph excluded as an induced ordered subgraph."""

    name: str
    graph: OrderedGraph

    @property
    def size(self) -> int:
        """Vertex count of the pattern."""
        return self.graph.n

    def reversed(self) -> "Pattern":
        """Mirror pattern with the vertex order reversed."""
        return Pattern(f"reverse({self.name})", reverse(self.graph))


def _check_ell(ell: int) -> None:
    if ell < 0:
        raise ValueError("ell must be non-negative")


def edge_span(ell: int) -> Pattern:
    """Edge between the first and last of ell+2 vertices."""
    _check_ell(ell)
    return Pattern(f"edge-span:{ell}", build_graph(ell + 2, [(0, ell + 1)]))


def padded_edge(ell: int) -> Pattern:
    """Edge with ell isolated vertices before, between and after its ends."""
    _check_ell(ell)
    return Pattern(f"padded-edge:{ell}", build_graph(3 * ell + 2, [(ell, 2 * ell + 1)]))


def fork() -> Pattern:
    """First vertex adjacent to two later non-adjacent vertices."""
    return Pattern("fork", build_graph(3, [(0, 1), (0, 2)]))


def fork_tail() -> Pattern:
    """Fork followed by an isolated vertex."""
    return Pattern("fork-tail", build_graph(4, [(0, 1), (0, 2)]))


def padded_fork(ell: int) -> Pattern:
    """ell isolated vertices followed by a fork."""
    _check_ell(ell)
    if ell == 0:
        return fork()
    return Pattern(
        f"padded-fork:{ell}", build_graph(ell + 3, [(ell, ell + 1), (ell, ell + 2)])
    )


def nested_pair() -> Pattern:
    """Edge 0-3 nested over edge 1-2."""
    return Pattern("nested-pair", build_graph(4, [(0, 3), (1, 2)]))


_FIXED: Dict[str, Callable[[], Pattern]] = {
    "fork": fork,
    "fork-tail": fork_tail,
    "nested-pair": nested_pair,
}

_PARAMETRIC: Dict[str, Callable[[int], Pattern]] = {
    "edge-span": edge_span,
    "padded-edge": padded_edge,
    "padded-fork": padded_fork,
}


def pattern_by_name(name: str) -> Pattern:
    """Resolve a catalog name such as 'fork' or 'padded-edge:2'."""
    base, _, param = name.partition(":")
    if base in _FIXED and not param:
        return _FIXED[base]()
    if base in _PARAMETRIC and param:
        try:
            ell = int(param)
        except ValueError:
            raise ValueError(f"invalid pattern parameter in {name!r}") from None
        return _PARAMETRIC[base](ell)
    raise KeyError(f"unknown pattern {name!r}")


def find_induced(g: OrderedGraph, p: Pattern) -> Optional[Witness]:
    """Lexicographically smallest increasing tuple inducing p, or None.

    Candidates for a pattern vertex with an earlier pattern neighbor are drawn
    from that neighbor's adjacency; earlier vertices that still need a later
    neighbor cap the search window.
    """
    h = p.graph
    size = h.n
    if size == 0:
        return ()
    ordered_adj = [sorted(nbrs) for nbrs in g.adjacency]
    anchor = [min((j for j in h.adjacency[i] if j < i), default=None) for i in range(size)]
    pending = [
        [j for j in range(depth) if any(k > depth for k in h.adjacency[j])] for depth in range(size)
    ]
    chosen: List[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == size:
            return True
        stop = g.n - (size - depth) + 1
        for j in pending[depth]:
            nbrs = ordered_adj[chosen[j]]
            stop = min(stop, nbrs[-1] if nbrs else 0)
        if anchor[depth] is None:
            candidates = range(start, stop)
        else:
            nbrs = ordered_adj[chosen[anchor[depth]]]
            candidates = nbrs[bisect_left(nbrs, start):bisect_left(nbrs, stop)]
        want = h.adjacency[depth]
        for v in candidates:
            adj = g.adjacency[v]
            if all((chosen[i] in adj) == (i in want) for i in range(depth)):
                chosen.append(v)
                if extend(v + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def is_free(g: OrderedGraph, p: Pattern) -> bool:
    """True if g has no induced ordered copy of p."""
    return find_induced(g, p) is None


def require_free(g: OrderedGraph, p: Pattern) -> None:
    """Raise PreconditionError carrying the witness if g contains p."""
    witness = find_induced(g, p)
    if witness is not None:
        raise PreconditionError(
            f"graph contains {p.name} at {list(witness)}", witness=witness, pattern=p.name
        )


def contains_clique(g: OrderedGraph, s: int) -> Optional[Witness]:
    """Lexicographically first s-clique as an increasing tuple, or None."""
    if s < 1:
        raise ValueError("clique size must be at least 1")
    chosen: List[int] = []

    def extend(candidates: List[int]) -> bool:
        if len(chosen) == s:
            return True
        for i, v in enumerate(candidates):
            if len(chosen) + len(candidates) - i < s:
                return False
            chosen.append(v)
            if extend([u for u in candidates[i + 1:] if u in g.adjacency[v]]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend(list(range(g.n))) else None
