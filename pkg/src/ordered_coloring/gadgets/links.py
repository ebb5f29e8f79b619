"""Links: list-labelled ordered graphs with an input prefix and an output suffix."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from ordered_coloring.core.graph import build_graph
from ordered_coloring.core.instance import Instance
from ordered_coloring.core.patterns import find_induced, nested_pair
from ordered_coloring.errors import GraphError, InvariantViolation

LOG = logging.getLogger(__name__)

WIRE = frozenset((1, 2))


@dataclass(frozen=True)
class Link:
    """An instance whose first ``in_arity`` vertices are inputs and last ``out_arity`` are outputs."""

    instance: Instance
    in_arity: int
    out_arity: int

    def __post_init__(self) -> None:
        n = self.instance.n
        if self.in_arity < 1 or self.out_arity < 1:
            raise GraphError("a link needs at least one input and one output")
        if self.in_arity + self.out_arity > n:
            raise GraphError("input and output vertices must be disjoint")
        for v in list(self.inputs) + list(self.outputs):
            if self.instance.lists[v] != WIRE:
                raise GraphError(f"terminal vertex {v} must have list {{1, 2}}")
        if not self.instance.graph.is_independent(self.inputs):
            raise GraphError("input vertices must be independent")
        if not self.instance.graph.is_independent(self.outputs):
            raise GraphError("output vertices must be independent")

    @property
    def n(self) -> int:
        """Vertex count."""
        return self.instance.n

    @property
    def inputs(self) -> range:
        """Input vertices in wire order."""
        return range(self.in_arity)

    @property
    def outputs(self) -> range:
        """Output vertices in wire order."""
        return range(self.n - self.out_arity, self.n)

    def to_instance(self) -> Instance:
        """The link as a plain list-coloring instance."""
        return self.instance

    def pin(self, inputs: Sequence[int]) -> Instance:
        """The instance with input wire i restricted to color inputs[i]."""
        if len(inputs) != self.in_arity:
            raise GraphError(f"expected {self.in_arity} input colors, got {len(inputs)}")
        return self.instance.pinned(dict(zip(self.inputs, inputs)))


def certify(link: Link) -> Link:
    """Check nested-pair-freeness, raising InvariantViolation with the witness."""
    witness = find_induced(link.instance.graph, nested_pair())
    if witness is not None:
        raise InvariantViolation(f"link contains nested-pair at {list(witness)}")
    return link


@dataclass
class LinkBuilder:
    """Collects named vertices with sort keys; the key order becomes the vertex order."""

    keys: Dict[Hashable, tuple] = field(default_factory=dict)
    lists: Dict[Hashable, FrozenSet[int]] = field(default_factory=dict)
    edges: List[Tuple[Hashable, Hashable]] = field(default_factory=list)

    def add(self, name: Hashable, key: tuple, colors: Iterable[int] = WIRE) -> None:
        """Introduce a vertex."""
        if name in self.keys:
            raise InvariantViolation(f"vertex {name!r} added twice")
        self.keys[name] = key
        self.lists[name] = frozenset(colors)

    def connect(self, a: Hashable, b: Hashable) -> None:
        """Add the edge ab."""
        self.edges.append((a, b))

    def build(
        self,
        inputs: Sequence[Hashable],
        outputs: Sequence[Hashable],
        recolor: Optional[Mapping[int, int]] = None,
    ) -> Link:
        """Freeze into a Link; ``recolor`` renames colors in every list."""
        order = sorted(self.keys, key=self.keys.__getitem__)
        head, tail = order[: len(inputs)], order[len(order) - len(outputs):]
        if head != list(inputs) or tail != list(outputs):
            raise InvariantViolation("terminal vertices are not at the ends of the order")
        index = {name: i for i, name in enumerate(order)}
        recolor = recolor or {}
        lists = tuple(frozenset(recolor.get(c, c) for c in self.lists[name]) for name in order)
        graph = build_graph(len(order), [(index[a], index[b]) for a, b in self.edges])
        return Link(Instance(graph, lists, 4), len(inputs), len(outputs))


def identity_link(ell: int) -> Link:
    """ell parallel three-vertex paths x_i - m_i - y_i."""
    if ell < 1:
        raise GraphError("identity link needs at least one wire")
    edges = [(i, ell + i) for i in range(ell)] + [(ell + i, 2 * ell + i) for i in range(ell)]
    return Link(Instance(build_graph(3 * ell, edges), (WIRE,) * (3 * ell), 4), ell, ell)


def chain(a: Link, b: Link, check: bool = True) -> Link:
    """Identify the outputs of a with the inputs of b."""
    if a.out_arity != b.in_arity:
        raise GraphError(f"cannot chain {a.out_arity} outputs into {b.in_arity} inputs")
    shared = a.out_arity
    for i in range(shared):
        if a.instance.lists[a.outputs[i]] != b.instance.lists[i]:
            raise GraphError(f"list mismatch on chained wire {i + 1}")
    offset = a.n - shared
    edges = list(a.instance.graph.edges())
    edges.extend((offset + u, offset + v) for u, v in b.instance.graph.edges())
    lists = a.instance.lists + b.instance.lists[shared:]
    joined = Link(Instance(build_graph(a.n + b.n - shared, edges), lists, 4), a.in_arity, b.out_arity)
    LOG.debug("chained links of %d and %d vertices into %d", a.n, b.n, joined.n)
    return certify(joined) if check else joined


def chain_all(links: Sequence[Link], check: bool = True) -> Link:
    """Chain a nonempty sequence left to right."""
    if not links:
        raise GraphError("nothing to chain")
    result = links[0]
    for link in links[1:]:
        result = chain(result, link, check=False)
    return certify(result) if check else result
