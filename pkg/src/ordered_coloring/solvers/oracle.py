"""Exact reference solvers: backtracking with propagation and brute-force SAT."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterator, List, Mapping, Optional, Tuple

from ordered_coloring.core.formula import Cnf3, NaeFormula, all_assignments
from ordered_coloring.core.graph import OrderedGraph
from ordered_coloring.core.instance import Coloring, Instance
from ordered_coloring.core.kernel import ListState, initial_state, narrow
from ordered_coloring.solvers.base import ListColoringSolver

LOG = logging.getLogger(__name__)


def _next_open(removed: List[bool], start: int) -> Optional[int]:
    for v in range(start, len(removed)):
        if not removed[v]:
            return v
    return None


def _leaves(
    graph: OrderedGraph, root: ListState, deadline: Optional[float] = None
) -> Iterator[ListState]:
    """Fully resolved states in branching order (vertices by index, colors ascending)."""
    first = _next_open(root[1], 0)
    if first is None:
        yield root
        return
    stack = [(root, first, iter(sorted(root[0][first])))]
    nodes = 0
    while stack:
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("search exceeded its time budget")
        state, v, colors = stack[-1]
        color = next(colors, None)
        if color is None:
            stack.pop()
            continue
        nodes += 1
        child = narrow(graph, state, {v: frozenset((color,))})
        if child is None:
            continue
        nxt = _next_open(child[1], v + 1)
        if nxt is None:
            yield child
            continue
        stack.append((child, nxt, iter(sorted(child[0][nxt]))))
    LOG.debug("oracle search exhausted after %d nodes", nodes)


def _to_coloring(state: ListState) -> Coloring:
    return Coloring(tuple(next(iter(lst)) for lst in state[0]))


def solve_exact(inst: Instance) -> Optional[Coloring]:
    """First proper list coloring in branching order, or None."""
    root = initial_state(inst)
    if root is None:
        return None
    for leaf in _leaves(inst.graph, root):
        return _to_coloring(leaf)
    return None


def count_colorings(inst: Instance) -> int:
    """Exact number of proper list colorings."""
    root = initial_state(inst)
    if root is None:
        return 0
    return sum(1 for _ in _leaves(inst.graph, root))


def feasible_with_pins(
    inst: Instance, pins: Mapping[int, int], timeout: Optional[float] = None
) -> bool:
    """True if inst has a proper coloring agreeing with pins.

    Raises TimeoutError when ``timeout`` seconds elapse first.
    """
    root = initial_state(inst.pinned(pins))
    if root is None:
        return False
    deadline = time.monotonic() + timeout if timeout is not None else None
    for _ in _leaves(inst.graph, root, deadline):
        return True
    return False


def sat_brute(f: Cnf3) -> Optional[Tuple[bool, ...]]:
    """First satisfying assignment in counting order, or None."""
    for assignment in all_assignments(f.num_vars):
        if f.is_satisfied_by(assignment):
            return assignment
    return None


def nae_brute(f: NaeFormula) -> Optional[Tuple[bool, ...]]:
    """First NAE-satisfying assignment in counting order, or None."""
    for assignment in all_assignments(f.num_vars):
        if f.is_satisfied_by(assignment):
            return assignment
    return None


@dataclass
class OracleSolver(ListColoringSolver):
    """Exact backtracking route; applies to every instance."""

    route = "oracle"

    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Return the oracle's first coloring."""
        return solve_exact(inst)
