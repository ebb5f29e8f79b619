"""List 4-coloring on padded-fork-free ordered graphs.

Pipeline: reject graphs with a K5; handle colorings where some color is used
fewer than ell times through a 3-color subsolver; otherwise guess the first
ell vertices of each color (phase 1), guess colors around the first good
vertices (phase 2), split the bad prefix by its two-color lists (phase 3),
and pin the safe neighbors of the guessed sets before deleting harmless edges
and finishing on the resulting chordal graph (phase 4).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
from scipy.special import comb

from ordered_coloring.core.graph import OrderedGraph
from ordered_coloring.core.instance import Coloring, Instance
from ordered_coloring.core.kernel import (
    ListState,
    kernelize,
    lift,
    narrow,
    pinnings,
    state_coloring,
    surviving,
)
from ordered_coloring.core.patterns import contains_clique, find_induced, fork, padded_fork, require_free
from ordered_coloring.errors import InvariantViolation, PreconditionError
from ordered_coloring.solvers.base import ListColoringSolver
from ordered_coloring.solvers.chordal import solve_fork_free
from ordered_coloring.solvers.oracle import solve_exact
from ordered_coloring.solvers.two_list import solve_two_lists
from ordered_coloring.utils.branching import BranchCounter, first_success

LOG = logging.getLogger(__name__)

COLORS = frozenset((1, 2, 3, 4))
PAIRS: Tuple[FrozenSet[int], ...] = tuple(frozenset(p) for p in combinations(sorted(COLORS), 2))

Subsolver = Callable[[Instance], Optional[Coloring]]

SUB3_SOLVERS: Dict[str, Subsolver] = {
    "oracle": solve_exact,
    "edwards": solve_two_lists,
}


def ramsey_upper(s: int, t: int) -> int:
    """Binomial upper bound C(s+t-2, s-1) on the Ramsey number Ram(s, t)."""
    if s < 1 or t < 1:
        raise ValueError("Ramsey arguments must be positive")
    return int(comb(s + t - 2, s - 1, exact=True))


@dataclass(frozen=True)
class NeighborClassification:
    """Safe and dangerous forward neighbors per vertex, plus the bad set."""

    safe: Dict[int, FrozenSet[int]]
    dangerous: Dict[int, FrozenSet[int]]
    bad: FrozenSet[int]

    def good(self) -> List[int]:
        """Classified vertices that are not bad, in order."""
        return sorted(v for v in self.safe if v not in self.bad)


def _classify(
    graph: OrderedGraph, lists: Sequence[FrozenSet[int]], alive: Sequence[int], ell: int
) -> NeighborClassification:
    alive_set = set(alive)
    safe: Dict[int, FrozenSet[int]] = {}
    dangerous: Dict[int, FrozenSet[int]] = {}
    bad = set()
    for v in alive:
        forward = [u for u in graph.adjacency[v] if u > v and u in alive_set]
        safe[v] = frozenset(u for u in forward if lists[u] & lists[v])
        dangerous[v] = frozenset(u for u in forward if not lists[u] & lists[v])
        if len(safe[v]) > 12:
            raise InvariantViolation(f"vertex {v} has {len(safe[v])} safe forward neighbors")
        if len(dangerous[v]) >= 3 * ell + 4:
            if len(lists[v]) != 2:
                raise InvariantViolation(f"bad vertex {v} has list {sorted(lists[v])}")
            bad.add(v)
        elif len(forward) > 3 * ell + 15:
            raise InvariantViolation(f"good vertex {v} has {len(forward)} forward neighbors")
    return NeighborClassification(safe, dangerous, frozenset(bad))


def classify_neighbors(inst: Instance, ell: int) -> NeighborClassification:
    """Classify forward neighbors of every vertex of a kernelized phase-1 branch."""
    return _classify(inst.graph, inst.lists, range(inst.n), ell)


def audit_common_color(
    graph: OrderedGraph, lists: Sequence[FrozenSet[int]], alive: Sequence[int]
) -> int:
    """Check that no fork has a color common to its three lists; returns forks seen."""
    alive_set = set(alive)
    seen = 0
    for x in alive:
        forward = sorted(u for u in graph.adjacency[x] if u > x and u in alive_set)
        for y, z in combinations(forward, 2):
            if graph.has_edge(y, z):
                continue
            seen += 1
            if lists[x] & lists[y] & lists[z]:
                raise InvariantViolation(f"fork {(x, y, z)} shares a color")
    return seen


def audit_bad_non_neighbors(
    graph: OrderedGraph,
    lists: Sequence[FrozenSet[int]],
    classification: NeighborClassification,
    ell: int,
) -> None:
    """Each bad vertex misses fewer than Ram(5, ell) earlier bad vertices with another list."""
    limit = ramsey_upper(5, ell) - 1
    bad = sorted(classification.bad)
    for i, v in enumerate(bad):
        missed = [u for u in bad[:i] if lists[u] != lists[v] and not graph.has_edge(u, v)]
        if len(missed) > limit:
            raise InvariantViolation(
                f"bad vertex {v} is non-adjacent to {len(missed)} earlier bad vertices"
            )


def audit_two_lists(lists: Sequence[FrozenSet[int]], prefix: Sequence[int]) -> None:
    """Lists on the surviving prefix are pairwise equal or disjoint."""
    distinct = {lists[v] for v in prefix}
    for a, b in combinations(distinct, 2):
        if a & b:
            raise InvariantViolation(f"prefix carries overlapping lists {sorted(a)} and {sorted(b)}")


@dataclass
class PhaseContext:
    """Branch state threaded through phases 2 to 4, in the kernel's index space."""

    state: ListState
    classification: NeighborClassification
    d: Tuple[int, ...] = ()
    prefix: Tuple[int, ...] = ()
    suffix: Tuple[int, ...] = ()
    groups: Dict[FrozenSet[int], Tuple[int, ...]] = field(default_factory=dict)
    u_sets: Dict[FrozenSet[int], Tuple[int, ...]] = field(default_factory=dict)
    y: Tuple[int, ...] = ()


@dataclass
class Ljj4Stats:
    """Counters collected during one solve."""

    branch_a: int = 0
    phase1: int = 0
    phase4: int = 0
    forks_audited: int = 0
    bad_audits: int = 0
    two_list_audits: int = 0


@dataclass
class Ljj4Solver(ListColoringSolver):
    """Route for padded-fork(ell)-free ordered graphs with lists inside [4]."""

    route = "ljj4"
    ell: int = 1
    sub3: str = "oracle"
    sub3_edwards: bool = False
    threads: int = 1
    stats: Ljj4Stats = field(default_factory=Ljj4Stats)

    def check(self, inst: Instance) -> None:
        """Validate ell, lists and pattern-freeness."""
        if self.ell < 1:
            raise PreconditionError("ljj4 route needs ell >= 1")
        if self.sub3 not in SUB3_SOLVERS:
            raise PreconditionError(f"unknown 3-color subsolver {self.sub3!r}")
        for v, lst in enumerate(inst.lists):
            if not lst <= COLORS:
                raise PreconditionError(f"list of vertex {v} is not inside [1..4]")
        require_free(inst.graph, padded_fork(self.ell))

    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Run the full pipeline."""
        self.check(inst)
        self.stats = Ljj4Stats()
        if contains_clique(inst.graph, 5) is not None:
            LOG.debug("ljj4: K5 present, rejecting")
            return None
        red = kernelize(inst)
        if red.is_no:
            return None
        col = self._solve_kernel(red.instance)
        return None if col is None else lift(red, col)

    def _solve_kernel(self, base: Instance) -> Optional[Coloring]:
        if base.n == 0:
            return Coloring(())
        found = first_success(
            self._rare_color_items(base), lambda item: self._rare_color(base, *item), self.threads
        )
        if found is not None:
            return found
        counter = BranchCounter("ljj4 phase 1", base.n ** (4 * self.ell))

        def counted() -> Iterator[ListState]:
            for state in self._phase1(base):
                counter.tick()
                yield state

        result = first_success(counted(), lambda state: self._phase2(base, state), self.threads)
        counter.log()
        self.stats.phase1 = counter.count
        return result

    def _sub3_solve(self, inst: Instance) -> Optional[Coloring]:
        if self.sub3_edwards and inst.max_list_size() <= 2:
            return solve_two_lists(inst)
        return SUB3_SOLVERS[self.sub3](inst)

    def _rare_color_items(self, base: Instance) -> Iterator[Tuple[int, Tuple[int, ...]]]:
        for color in sorted(COLORS):
            holders = [v for v in range(base.n) if color in base.lists[v]]
            for size in range(0, min(self.ell - 1, len(holders)) + 1):
                for chosen in combinations(holders, size):
                    if base.graph.is_independent(chosen):
                        yield color, chosen

    def _rare_color(self, base: Instance, color: int, chosen: Tuple[int, ...]) -> Optional[Coloring]:
        """Color ``chosen`` exactly with ``color`` and solve the rest with three colors."""
        self.stats.branch_a += 1
        picked = set(chosen)
        only = frozenset((color,))
        lists = [only if v in picked else lst - only for v, lst in enumerate(base.lists)]
        red = kernelize(base.with_lists(lists))
        if red.is_no:
            return None
        col = self._sub3_solve(red.instance)
        return None if col is None else lift(red, col)

    def _phase1(self, base: Instance) -> Iterator[ListState]:
        """Guess the first ell vertices of every color."""
        g = base.graph
        ell = self.ell
        order = sorted(COLORS)

        def extend(index: int, state: ListState, used: FrozenSet[int]) -> Iterator[ListState]:
            if index == len(order):
                yield state
                return
            color = order[index]
            only = frozenset((color,))
            holders = [v for v in range(base.n) if color in state[0][v] and v not in used]
            for first in combinations(holders, ell):
                if not g.is_independent(first):
                    continue
                allowed = {v: only for v in first}
                for v in range(first[-1]):
                    if v not in allowed:
                        allowed[v] = state[0][v] - only
                child = narrow(g, state, allowed)
                if child is not None:
                    yield from extend(index + 1, child, used | set(first))

        root: ListState = (list(base.lists), [False] * base.n)
        yield from extend(0, root, frozenset())

    def _phase2(self, base: Instance, state: ListState) -> Optional[Coloring]:
        g = base.graph
        lists, _ = state
        alive = surviving(state)
        cls = _classify(g, lists, alive, self.ell)
        self.stats.forks_audited += audit_common_color(g, lists, alive)
        audit_bad_non_neighbors(g, lists, cls, self.ell)
        self.stats.bad_audits += 1
        ram = ramsey_upper(5, self.ell)
        good = cls.good()
        LOG.debug("ljj4 phase 2: %d alive, %d good, %d bad", len(alive), len(good), len(cls.bad))

        if len(good) < ram:
            for pinned in pinnings(g, state, good):
                col = self._finish_two_lists(base, pinned)
                if col is not None:
                    return col
            return None

        d = tuple(good[:ram])
        around = set(d)
        for v in d:
            around.update(u for u in g.adjacency[v] if u > v and not state[1][u])
        last = d[-1]
        ctx = PhaseContext(
            state=state,
            classification=cls,
            d=d,
            prefix=tuple(v for v in alive if v < last),
            suffix=tuple(v for v in alive if v > last),
        )
        for pinned in pinnings(g, state, sorted(around)):
            col = self._phase3(base, replace(ctx, state=pinned))
            if col is not None:
                return col
        return None

    def _finish_two_lists(self, base: Instance, state: ListState) -> Optional[Coloring]:
        alive = surviving(state)
        sub = Instance(base.graph, tuple(state[0]), base.k).induced(alive)
        if sub.max_list_size() > 2:
            raise InvariantViolation("vertices with more than two colors survived the good-vertex guess")
        col = solve_two_lists(sub)
        if col is None:
            return None
        return _merge(state, alive, col)

    def _phase3(self, base: Instance, ctx: PhaseContext) -> Optional[Coloring]:
        g = base.graph
        lists, removed = ctx.state
        prefix = [v for v in ctx.prefix if not removed[v]]
        for v in prefix:
            if len(lists[v]) != 2:
                raise InvariantViolation(f"prefix vertex {v} has list {sorted(lists[v])}")
        groups = {}
        for pair in PAIRS:
            members = tuple(v for v in prefix if lists[v] == pair)
            if not members:
                continue
            sub = nx.Graph()
            sub.add_nodes_from(members)
            sub.add_edges_from((u, v) for u, v in combinations(members, 2) if g.has_edge(u, v))
            if not nx.is_bipartite(sub):
                LOG.debug("ljj4 phase 3: prefix group %s is not bipartite", sorted(pair))
                return None
            groups[pair] = members
        ctx = replace(ctx, groups=groups)

        options = [list(self._group_options(g, pair, members)) for pair, members in groups.items()]
        keys = list(groups)

        def extend(i: int, state: ListState, u_sets: Dict[FrozenSet[int], Tuple[int, ...]]):
            if i == len(keys):
                yield state, u_sets
                return
            for allowed, first in options[i]:
                child = narrow(g, state, allowed)
                if child is None:
                    continue
                chosen = dict(u_sets)
                if first is not None:
                    chosen[keys[i]] = first
                yield from extend(i + 1, child, chosen)

        for state3, u_sets in extend(0, ctx.state, {}):
            col = self._phase4(base, replace(ctx, state=state3, u_sets=u_sets))
            if col is not None:
                return col
        return None

    def _group_options(
        self, g: OrderedGraph, pair: FrozenSet[int], members: Tuple[int, ...]
    ) -> Iterator[Tuple[Dict[int, FrozenSet[int]], Optional[Tuple[int, ...]]]]:
        """List restrictions for one prefix group, with the guessed first set of its smaller color."""
        ell = self.ell
        i, j = sorted(pair)
        if len(members) < 2 * ell:
            for colors in product(sorted(pair), repeat=len(members)):
                yield {v: frozenset((c,)) for v, c in zip(members, colors)}, None
            return
        for iota in (i, j):
            other = pair - {iota}
            for size in range(0, ell):
                for chosen in combinations(members, size):
                    if not g.is_independent(chosen):
                        continue
                    yield {v: (frozenset((iota,)) if v in chosen else other) for v in members}, None
        for first_i in combinations(members, ell):
            if not g.is_independent(first_i):
                continue
            rest = [v for v in members if v not in first_i]
            for first_j in combinations(rest, ell):
                if not g.is_independent(first_j):
                    continue
                allowed = {}
                for v in members:
                    keep = set(pair)
                    if v in first_i:
                        keep = {i}
                    elif v in first_j:
                        keep = {j}
                    if v not in first_i and v < first_i[-1]:
                        keep.discard(i)
                    if v not in first_j and v < first_j[-1]:
                        keep.discard(j)
                    allowed[v] = frozenset(keep)
                yield allowed, first_i

    def _phase4(self, base: Instance, ctx: PhaseContext) -> Optional[Coloring]:
        g = base.graph
        lists, removed = ctx.state
        prefix = [v for v in ctx.prefix if not removed[v]]
        audit_two_lists(lists, prefix)
        self.stats.two_list_audits += 1
        present = {lists[v] for v in prefix}
        y = set()
        for pair in present:
            first = ctx.u_sets.get(pair)
            if first is None:
                raise InvariantViolation(f"prefix group {sorted(pair)} survived without a guessed first set")
            for u in first:
                y.update(
                    w for w in g.adjacency[u] if w > u and not removed[w] and lists[w] & pair
                )
        ctx = replace(ctx, y=tuple(sorted(y)))
        prefix_set = set(ctx.prefix)
        split = present | {COLORS - pair for pair in present}
        for state4 in pinnings(g, ctx.state, ctx.y):
            self.stats.phase4 += 1
            col = self._finish_chordal(base, state4, prefix_set, split)
            if col is not None:
                return col
        return None

    def _finish_chordal(
        self,
        base: Instance,
        state: ListState,
        prefix: Set[int],
        split: Set[FrozenSet[int]],
    ) -> Optional[Coloring]:
        lists, _ = state
        alive = surviving(state)
        sub = Instance(base.graph, tuple(lists), base.k).induced(alive)
        dropped = []
        for a, b in sub.graph.edges():
            va, vb = alive[a], alive[b]
            la, lb = lists[va], lists[vb]
            if la in split and lb == COLORS - la and (va in prefix or vb in prefix):
                dropped.append((a, b))
        sub = sub.with_graph(sub.graph.without_edges(dropped))
        witness = find_induced(sub.graph, fork())
        if witness is not None:
            raise InvariantViolation(
                f"phase 4 graph contains a fork at {[alive[i] for i in witness]}"
            )
        col = solve_fork_free(sub)
        if col is None:
            return None
        return _merge(state, alive, col)


def _merge(state: ListState, alive: Sequence[int], col: Coloring) -> Coloring:
    colors = state_coloring(state)
    for i, v in enumerate(alive):
        colors[v] = col[i]
    return Coloring(tuple(colors))


def solve4_padded_fork_free(
    inst: Instance,
    ell: int,
    sub3: str = "oracle",
    sub3_edwards: bool = False,
    threads: int = 1,
) -> Optional[Coloring]:
    """Solve List 4-Coloring on a padded-fork(ell)-free ordered graph."""
    return Ljj4Solver(ell=ell, sub3=sub3, sub3_edwards=sub3_edwards, threads=threads).solve(inst)
