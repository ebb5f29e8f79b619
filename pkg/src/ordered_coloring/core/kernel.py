"""Exhaustive application of the empty-list and singleton reduction rules."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from ordered_coloring.core.graph import OrderedGraph
from ordered_coloring.core.instance import Coloring, Instance, is_proper
from ordered_coloring.errors import GraphError

LOG = logging.getLogger(__name__)

NO = "NO"
REDUCED = "REDUCED"

Trace = List[Tuple[int, int]]


def propagate(
    graph: OrderedGraph,
    lists: List[FrozenSet[int]],
    removed: List[bool],
    queue: Iterable[int],
) -> Optional[Trace]:
    """Remove singleton vertices from the queue onward, stripping their color from neighbors.

    ``lists`` and ``removed`` are updated in place. Vertices whose list drops to
    one color are appended to the queue. Returns the removal trace, or None as
    soon as some list becomes empty.
    """
    pending: Deque[int] = deque(queue)
    trace: Trace = []
    while pending:
        v = pending.popleft()
        if removed[v]:
            continue
        lst = lists[v]
        if len(lst) != 1:
            if not lst:
                return None
            continue
        (color,) = lst
        removed[v] = True
        trace.append((v, color))
        for u in sorted(graph.adjacency[v]):
            if removed[u] or color not in lists[u]:
                continue
            shrunk = lists[u] - {color}
            lists[u] = shrunk
            if not shrunk:
                return None
            if len(shrunk) == 1:
                pending.append(u)
    return trace


@dataclass(frozen=True)
class ReducedInstance:
    """Result of kernelization."""

    status: str
    instance: Optional[Instance] = None
    trace: Tuple[Tuple[int, int], ...] = ()
    index_map: Tuple[int, ...] = ()
    source_n: int = 0

    @property
    def is_no(self) -> bool:
        """True when the rules rejected the instance."""
        return self.status == NO

    def forced(self) -> Dict[int, int]:
        """Colors fixed by the singleton rule, keyed by original vertex."""
        return dict(self.trace)

    def to_dict(self) -> dict:
        """Serializable trace sidecar."""
        return {
            "status": self.status,
            "trace": [list(t) for t in self.trace],
            "index_map": list(self.index_map),
        }


def kernelize(inst: Instance) -> ReducedInstance:
    """Apply the reduction rules exhaustively."""
    lists = list(inst.lists)
    if any(not lst for lst in lists):
        return ReducedInstance(NO, source_n=inst.n)
    removed = [False] * inst.n
    trace = propagate(inst.graph, lists, removed, [v for v in range(inst.n) if len(lists[v]) == 1])
    if trace is None:
        LOG.debug("kernelize: empty list reached on %d-vertex instance", inst.n)
        return ReducedInstance(NO, source_n=inst.n)
    survivors = [v for v in range(inst.n) if not removed[v]]
    reduced = Instance(inst.graph, tuple(lists), inst.k).induced(survivors)
    LOG.debug("kernelize: %d forced, %d survive", len(trace), len(survivors))
    return ReducedInstance(REDUCED, reduced, tuple(trace), tuple(survivors), inst.n)


def lift(red: ReducedInstance, col: Coloring) -> Coloring:
    """Merge a coloring of the reduced instance with the forced colors."""
    if red.is_no or red.instance is None:
        raise GraphError("cannot lift a coloring through a NO kernel")
    if not is_proper(red.instance, col):
        raise GraphError("coloring is not proper on the reduced instance")
    colors = [0] * red.source_n
    for v, c in red.trace:
        colors[v] = c
    for i, v in enumerate(red.index_map):
        colors[v] = col[i]
    return Coloring(tuple(colors))


ListState = Tuple[List[FrozenSet[int]], List[bool]]


def initial_state(inst: Instance) -> Optional[ListState]:
    """Propagated (lists, removed) state of an instance, or None on NO."""
    lists = list(inst.lists)
    if any(not lst for lst in lists):
        return None
    removed = [False] * inst.n
    if propagate(inst.graph, lists, removed, [v for v in range(inst.n) if len(lists[v]) == 1]) is None:
        return None
    return lists, removed


def narrow(
    graph: OrderedGraph, state: ListState, allowed: Mapping[int, FrozenSet[int]]
) -> Optional[ListState]:
    """Intersect lists with ``allowed`` and propagate; None if a list empties.

    A vertex already removed keeps its forced color, so narrowing it away
    rejects the state.
    """
    lists, removed = list(state[0]), list(state[1])
    queue = []
    for v, keep in allowed.items():
        lst = lists[v]
        new = lst & keep
        if new == lst:
            continue
        if not new or removed[v]:
            return None
        lists[v] = new
        if len(new) == 1:
            queue.append(v)
    if queue and propagate(graph, lists, removed, sorted(queue)) is None:
        return None
    return lists, removed


def pinnings(graph: OrderedGraph, state: ListState, vertices: Iterable[int]) -> Iterator[ListState]:
    """Every propagated state that fixes a color on each of ``vertices``.

    Vertices are pinned in the given order, colors ascending; branches that
    propagation rejects are skipped.
    """
    order = list(vertices)

    def extend(i: int, current: ListState) -> Iterator[ListState]:
        if i == len(order):
            yield current
            return
        v = order[i]
        if current[1][v]:
            yield from extend(i + 1, current)
            return
        for color in sorted(current[0][v]):
            child = narrow(graph, current, {v: frozenset((color,))})
            if child is not None:
                yield from extend(i + 1, child)

    yield from extend(0, state)


def surviving(state: ListState) -> List[int]:
    """Vertices not yet removed."""
    return [v for v, gone in enumerate(state[1]) if not gone]


def state_coloring(state: ListState) -> List[int]:
    """Forced colors of removed vertices (0 for survivors)."""
    return [next(iter(lst)) if gone else 0 for lst, gone in zip(state[0], state[1])]
