"""List coloring of complete graphs through saturating bipartite matchings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ordered_coloring.core.instance import Coloring, Instance
from ordered_coloring.errors import PreconditionError
from ordered_coloring.solvers.base import ListColoringSolver

LOG = logging.getLogger(__name__)

MATCHERS = ("augmenting", "hopcroft-karp")


def _augmenting_matching(adj: List[List[int]], num_colors: int) -> List[int]:
    """Vertex -> matched color index (-1 if unmatched), by simple augmenting paths."""
    owner: List[Optional[int]] = [None] * num_colors

    def search(v: int, seen: List[bool]) -> bool:
        for j in adj[v]:
            if not seen[j]:
                seen[j] = True
                if owner[j] is None or search(owner[j], seen):
                    owner[j] = v
                    return True
        return False

    for v in range(len(adj)):
        search(v, [False] * num_colors)
    match = [-1] * len(adj)
    for j, v in enumerate(owner):
        if v is not None:
            match[v] = j
    return match


def _scipy_matching(adj: List[List[int]], num_colors: int) -> List[int]:
    """Vertex -> matched color index via scipy's Hopcroft-Karp."""
    rows = np.array([v for v, cols in enumerate(adj) for _ in cols], dtype=np.int32)
    cols = np.array([j for cols in adj for j in cols], dtype=np.int32)
    biadjacency = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(adj), num_colors)
    )
    return [int(j) for j in maximum_bipartite_matching(biadjacency, perm_type="column")]


def solve_clique_unbounded(inst: Instance, matcher: str = "augmenting") -> Optional[Coloring]:
    """Distinct list colors on a complete graph, or None if no saturating matching exists."""
    if not inst.graph.is_complete():
        raise PreconditionError("clique-matching route needs a complete graph")
    if matcher not in MATCHERS:
        raise ValueError(f"unknown matcher {matcher!r}")
    palette = inst.palette()
    index = {c: j for j, c in enumerate(palette)}
    adj = [sorted(index[c] for c in lst) for lst in inst.lists]
    if inst.n == 0:
        return Coloring(())
    if inst.n > len(palette):
        return None
    match = (_augmenting_matching if matcher == "augmenting" else _scipy_matching)(adj, len(palette))
    if any(j < 0 for j in match):
        LOG.debug("matching saturates %d of %d vertices", sum(j >= 0 for j in match), inst.n)
        return None
    return Coloring(tuple(palette[j] for j in match))


@dataclass
class CliqueMatchingSolver(ListColoringSolver):
    """Route for complete graphs with any number of colors."""

    route = "clique-matching"
    matcher: str = "augmenting"

    def check(self, inst: Instance) -> None:
        """Graph must be complete."""
        if not inst.graph.is_complete():
            raise PreconditionError("clique-matching route needs a complete graph")

    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Match vertices to colors."""
        return solve_clique_unbounded(inst, self.matcher)
