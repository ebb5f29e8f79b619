"""List coloring with lists of size at most two, via 2-SAT."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from ordered_coloring.core.instance import Coloring, Instance
from ordered_coloring.errors import PreconditionError
from ordered_coloring.solvers.base import ListColoringSolver

LOG = logging.getLogger(__name__)


def _literal(inst: Instance, v: int, color: int):
    """Literal (v, True) means v takes the smaller color of its list."""
    return (v, color == min(inst.lists[v]))


def solve_two_lists(inst: Instance) -> Optional[Coloring]:
    """Solve an instance whose lists have at most two colors."""
    for v, lst in enumerate(inst.lists):
        if len(lst) > 2:
            raise PreconditionError(f"vertex {v} has {len(lst)} colors; at most 2 allowed")
        if not lst:
            return None
    implications = nx.DiGraph()
    for v in range(inst.n):
        implications.add_nodes_from([(v, True), (v, False)])
        if len(inst.lists[v]) == 1:
            implications.add_edge((v, False), (v, True))
    for u, v in inst.graph.edges():
        for color in inst.lists[u] & inst.lists[v]:
            lu, lv = _literal(inst, u, color), _literal(inst, v, color)
            implications.add_edge(lu, (lv[0], not lv[1]))
            implications.add_edge(lv, (lu[0], not lu[1]))
    dag = nx.condensation(implications)
    component = dag.graph["mapping"]
    rank = {c: i for i, c in enumerate(nx.topological_sort(dag))}
    colors = []
    for v in range(inst.n):
        pos, neg = component[(v, True)], component[(v, False)]
        if pos == neg:
            LOG.debug("2-SAT: vertex %d shares a component with its negation", v)
            return None
        smaller = rank[pos] > rank[neg]
        colors.append(min(inst.lists[v]) if smaller else max(inst.lists[v]))
    return Coloring(tuple(colors))


@dataclass
class TwoListSolver(ListColoringSolver):
    """Route for instances whose lists have at most two colors."""

    route = "two-list"

    def check(self, inst: Instance) -> None:
        """Lists must have at most two colors."""
        if inst.max_list_size() > 2:
            raise PreconditionError("two-list route needs every list to have at most two colors")

    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Solve via the implication graph."""
        return solve_two_lists(inst)
