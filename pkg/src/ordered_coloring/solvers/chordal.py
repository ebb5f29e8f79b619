"""List coloring on fork-free ordered graphs by dynamic programming over the clique tree."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from ordered_coloring.core.instance import Coloring, Instance
from ordered_coloring.core.patterns import fork, require_free
from ordered_coloring.errors import InvariantViolation
from ordered_coloring.solvers.base import ListColoringSolver

LOG = logging.getLogger(__name__)


def _separator_colorings(inst: Instance, sep: List[int]):
    """Proper colorings of a clique, as tuples aligned with sep."""
    for combo in product(*(sorted(inst.lists[u]) for u in sep)):
        if len(set(combo)) == len(combo):
            yield combo


def solve_fork_free(inst: Instance) -> Optional[Coloring]:
    """Solve a list coloring instance whose ordered graph is fork-free.

    The index order is then a perfect elimination ordering read forward: each
    bag {v} + N+(v) is a clique whose parent bag is that of the earliest
    forward neighbor.
    """
    g = inst.graph
    require_free(g, fork())
    if any(not lst for lst in inst.lists):
        return None
    separators: List[List[int]] = [sorted(g.forward_neighbors(v)) for v in range(g.n)]
    children: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for v in range(g.n):
        if not g.is_clique(separators[v]):
            raise InvariantViolation(f"forward neighborhood of {v} is not a clique")
        if separators[v]:
            children[separators[v][0]].append(v)

    # tables[v]: separator coloring -> a color of v extending into the subtree of v
    tables: List[Dict[Tuple[int, ...], int]] = []
    for v in range(g.n):
        sep = separators[v]
        table: Dict[Tuple[int, ...], int] = {}
        for sep_colors in _separator_colorings(inst, sep):
            assigned = dict(zip(sep, sep_colors))
            for c in sorted(inst.lists[v] - set(sep_colors)):
                assigned[v] = c
                if all(
                    tuple(assigned[u] for u in separators[w]) in tables[w] for w in children[v]
                ):
                    table[sep_colors] = c
                    break
        tables.append(table)
        LOG.debug("clique-tree bag %d: %d feasible separator colorings", v, len(table))

    colors = [0] * g.n
    for v in range(g.n - 1, -1, -1):
        key = tuple(colors[u] for u in separators[v])
        if key not in tables[v]:
            if separators[v]:
                raise InvariantViolation(f"parent choice left bag {v} without an extension")
            return None
        colors[v] = tables[v][key]
    return Coloring(tuple(colors))


@dataclass
class ChordalSolver(ListColoringSolver):
    """Route for fork-free ordered graphs."""

    route = "chordal"

    def check(self, inst: Instance) -> None:
        """Graph must be fork-free."""
        require_free(inst.graph, fork())

    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Run the clique-tree dynamic program."""
        return solve_fork_free(inst)
