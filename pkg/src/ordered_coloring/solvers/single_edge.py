"""List k-coloring on padded-edge-free ordered graphs.

Recursion on the number of colors: either some color is used on fewer than
2*ell vertices (guess them and drop the color), or every color has distinct
first and last ell occurrences, which are guessed before a dynamic program
over vertex prefixes tracks the last ell vertices of each color.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ordered_coloring.core.graph import induced
from ordered_coloring.core.instance import Coloring, Instance, is_proper
from ordered_coloring.core.kernel import ListState, kernelize, lift, narrow
from ordered_coloring.core.patterns import Pattern, edge_span, find_induced, padded_edge, require_free
from ordered_coloring.errors import InvariantViolation, PreconditionError
from ordered_coloring.solvers.base import ListColoringSolver
from ordered_coloring.solvers.two_list import solve_two_lists
from ordered_coloring.utils.branching import BranchCounter, first_success

LOG = logging.getLogger(__name__)

BlockTuple = Tuple[Tuple[int, ...], ...]
# state -> (previous state, color given to the newest vertex)
DpLayer = Dict[BlockTuple, Tuple[Optional[BlockTuple], int]]

_Branch = ListState


def build_tables(inst: Instance, palette: Sequence[int], ell: int) -> List[DpLayer]:
    """Reachable block tuples after each vertex prefix, with backpointers.

    Entry j (1-based prefix length) holds exactly the tuples (C_1..C_k) for
    which some list coloring of the first j vertices is compatible: a color
    class with fewer than ell vertices is listed in full, otherwise only its
    last ell vertices are kept.
    """
    g = inst.graph
    position = {c: i for i, c in enumerate(palette)}
    empty: BlockTuple = tuple(() for _ in palette)
    layers: List[DpLayer] = [{empty: (None, 0)}]
    for v in range(g.n):
        nbrs = g.adjacency[v]
        layer: DpLayer = {}
        for state in layers[-1]:
            for color in sorted(inst.lists[v]):
                t = position.get(color)
                if t is None:
                    continue
                block = state[t]
                if any(u in nbrs for u in block):
                    continue
                grown = block + (v,) if len(block) < ell else block[1:] + (v,)
                nxt = state[:t] + (grown,) + state[t + 1:]
                if nxt not in layer:
                    layer[nxt] = (state, color)
        layers.append(layer)
        if not layer:
            break
    return layers


def dp_fixed_ends(inst: Instance, k: int, ell: int) -> Tuple[bool, Optional[Coloring]]:
    """Decide a pruned branch instance by the prefix dynamic program.

    Each color class X_i must induce an edge-span(ell)-free graph; a violation
    means the branch was built incorrectly and raises InvariantViolation.
    """
    return _dp(inst, list(range(1, k + 1)), ell)


def _dp(inst: Instance, palette: Sequence[int], ell: int) -> Tuple[bool, Optional[Coloring]]:
    span = edge_span(ell)
    for color in palette:
        members = [v for v in range(inst.n) if color in inst.lists[v]]
        witness = find_induced(induced(inst.graph, members), span)
        if witness is not None:
            raise InvariantViolation(
                f"color {color} class contains {span.name} at {[members[i] for i in witness]}"
            )
    layers = build_tables(inst, palette, ell)
    if len(layers) <= inst.n or not layers[-1]:
        return False, None
    colors = [0] * inst.n
    state: Optional[BlockTuple] = min(layers[-1])
    for v in range(inst.n - 1, -1, -1):
        prev, color = layers[v + 1][state]
        colors[v] = color
        state = prev
    coloring = Coloring(tuple(colors))
    if not is_proper(inst, coloring):
        raise InvariantViolation("prefix table produced an improper coloring")
    return True, coloring


def _small_color_branches(
    inst: Instance, palette: Sequence[int], ell: int
) -> Iterator[Tuple[Instance, List[int]]]:
    """Instances where color i is used exactly on a set of at most 2*ell - 1 vertices."""
    for color in palette:
        rest = [c for c in palette if c != color]
        holders = [v for v in range(inst.n) if color in inst.lists[v]]
        for size in range(0, min(2 * ell - 1, len(holders)) + 1):
            for chosen in combinations(holders, size):
                if not inst.graph.is_independent(chosen):
                    continue
                picked = set(chosen)
                lists = [
                    frozenset((color,)) if v in picked else lst - {color}
                    for v, lst in enumerate(inst.lists)
                ]
                yield inst.with_lists(lists), rest


def _restrict(
    inst: Instance, branch: _Branch, color: int, a: Sequence[int], b: Sequence[int]
) -> Optional[_Branch]:
    """Apply the first/last occurrence guess for one color and propagate."""
    ends = set(a) | set(b)
    last_a, first_b = a[-1], b[0]
    only = frozenset((color,))
    allowed = {}
    for v in range(inst.n):
        if v in ends:
            allowed[v] = only
        elif v < last_a or v > first_b:
            allowed[v] = branch[0][v] - only
    return narrow(inst.graph, branch, allowed)


def _end_branches(inst: Instance, palette: Sequence[int], ell: int) -> Iterator[_Branch]:
    """Pruned branches over all choices of first and last ell vertices per color."""
    g = inst.graph

    def extend(index: int, branch: _Branch, used: FrozenSet[int]) -> Iterator[_Branch]:
        if index == len(palette):
            yield branch
            return
        color = palette[index]
        holders = [v for v in range(inst.n) if color in branch[0][v] and v not in used]
        for a in combinations(holders, ell):
            if not g.is_independent(a):
                continue
            later = [v for v in holders if v > a[-1]]
            for b in combinations(later, ell):
                if not g.is_independent(a + b):
                    continue
                child = _restrict(inst, branch, color, a, b)
                if child is not None:
                    yield from extend(index + 1, child, used | set(a) | set(b))

    root: _Branch = (list(inst.lists), [False] * inst.n)
    yield from extend(0, root, frozenset())


@dataclass
class SingleEdgeSolver(ListColoringSolver):
    """Route for padded-edge(ell)-free ordered graphs with lists inside [k]."""

    route = "single-edge"
    k: Optional[int] = None
    ell: int = 1
    threads: int = 1
    branch_counts: List[int] = field(default_factory=list)

    def check(self, inst: Instance) -> None:
        """Validate k, ell, lists and pattern-freeness."""
        if self.ell < 1:
            raise PreconditionError("single-edge route needs ell >= 1")
        k = self._k(inst)
        if k < 1:
            raise PreconditionError("single-edge route needs k >= 1")
        for v, lst in enumerate(inst.lists):
            if any(c > k for c in lst):
                raise PreconditionError(f"list of vertex {v} is not inside [1..{k}]")
        require_free(inst.graph, padded_edge(self.ell))

    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Solve by recursion on the palette."""
        self.check(inst)
        self.branch_counts = []
        palette = list(range(1, self._k(inst) + 1))
        return self._solve(inst, palette, self.threads)

    def _k(self, inst: Instance) -> int:
        if self.k is not None:
            return self.k
        if inst.k is not None:
            return inst.k
        return max(inst.palette(), default=1)

    def _solve(self, inst: Instance, palette: List[int], threads: int) -> Optional[Coloring]:
        red = kernelize(inst)
        if red.is_no:
            return None
        sub = red.instance
        palette = [c for c in palette if any(c in lst for lst in sub.lists)]
        col = self._solve_reduced(sub, palette, threads)
        return None if col is None else lift(red, col)

    def _solve_reduced(self, inst: Instance, palette: List[int], threads: int) -> Optional[Coloring]:
        if inst.n == 0:
            return Coloring(())
        if len(palette) <= 2:
            return solve_two_lists(inst)
        LOG.debug("single-edge: %d vertices, palette %s", inst.n, palette)

        found = first_success(
            _small_color_branches(inst, palette, self.ell),
            lambda item: self._solve(item[0], item[1], 1),
            threads,
        )
        if found is not None:
            return found

        counter = BranchCounter("single-edge ends", inst.n ** (2 * len(palette) * self.ell))

        def counted() -> Iterator[_Branch]:
            for branch in _end_branches(inst, palette, self.ell):
                counter.tick()
                yield branch

        result = first_success(counted(), lambda b: self._finish(inst, palette, b), threads)
        counter.log()
        self.branch_counts.append(counter.count)
        return result

    def _finish(self, inst: Instance, palette: List[int], branch: _Branch) -> Optional[Coloring]:
        lists, removed = branch
        survivors = [v for v in range(inst.n) if not removed[v]]
        sub = Instance(inst.graph, tuple(lists), inst.k).induced(survivors)
        ok, col = _dp(sub, palette, self.ell)
        if not ok:
            return None
        colors = [next(iter(lst)) for lst in lists]
        for i, v in enumerate(survivors):
            colors[v] = col[i]
        return Coloring(tuple(colors))


def solve_single_edge_free(
    inst: Instance, k: int, ell: int, threads: int = 1
) -> Optional[Coloring]:
    """Solve List k-Coloring on a padded-edge(ell)-free ordered graph."""
    return SingleEdgeSolver(k=k, ell=ell, threads=threads).solve(inst)


def ell_for_pattern(h: Pattern) -> int:
    """Padding that makes the one-edge pattern h an induced subgraph of padded_edge(ell)."""
    if h.graph.num_edges != 1:
        raise PreconditionError(f"pattern {h.name} must have exactly one edge")
    return max(1, h.size)


def solve_one_edge_pattern_free(inst: Instance, k: int, h: Pattern) -> Optional[Coloring]:
    """Solve on H-free ordered graphs for any pattern H with one edge."""
    require_free(inst.graph, h)
    return solve_single_edge_free(inst, k, ell_for_pattern(h))
