"""Edgeless graphs: any nonempty lists are colorable."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ordered_coloring.core.instance import Coloring, Instance
from ordered_coloring.errors import PreconditionError
from ordered_coloring.solvers.base import ListColoringSolver


def solve_edgeless(inst: Instance) -> Optional[Coloring]:
    """Pick the smallest color of every list."""
    if inst.graph.num_edges:
        raise PreconditionError("edgeless route needs a graph without edges")
    if any(not lst for lst in inst.lists):
        return None
    return Coloring(tuple(min(lst) for lst in inst.lists))


@dataclass
class EdgelessSolver(ListColoringSolver):
    """Route for graphs without edges."""

    route = "edgeless"

    def check(self, inst: Instance) -> None:
        if inst.graph.num_edges:
            raise PreconditionError("edgeless route needs a graph without edges")

    def solve(self, inst: Instance) -> Optional[Coloring]:
        return solve_edgeless(inst)
