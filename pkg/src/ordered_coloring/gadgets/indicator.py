"""Indicator and NOT-cc gadgets over systems of consecutive pairs."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple, Union

from ordered_coloring.errors import GraphError
from ordered_coloring.gadgets.links import Link, LinkBuilder, certify

LOG = logging.getLogger(__name__)

Pair = Tuple[int, int]
SWAP_12 = {1: 2, 2: 1}


@dataclass(frozen=True)
class PairSystem:
    """Pairwise disjoint pairs {i, i+1} of 1..n."""

    n: int
    pairs: Tuple[Pair, ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple(sorted(tuple(sorted(int(x) for x in p)) for p in self.pairs))
        used = set()
        for pair in pairs:
            if len(pair) != 2 or pair[1] != pair[0] + 1:
                raise GraphError(f"pair {list(pair)} is not of the form {{i, i+1}}")
            if pair[0] < 1 or pair[1] > self.n:
                raise GraphError(f"pair {list(pair)} outside 1..{self.n}")
            if used & set(pair):
                raise GraphError(f"pair {list(pair)} overlaps another pair")
            used.update(pair)
        object.__setattr__(self, "pairs", pairs)

    @property
    def firsts(self) -> frozenset:
        """Smaller element of every pair."""
        return frozenset(p[0] for p in self.pairs)


def _system(n: int, pairs: Iterable[Sequence[int]]) -> PairSystem:
    return PairSystem(n, tuple(tuple(p) for p in pairs))


def check_color(c: int) -> None:
    if c not in (1, 2):
        raise GraphError(f"gadget color must be 1 or 2, got {c}")


def gamma_map(n: int, pairs: Iterable[Sequence[int]]) -> Dict[Union[int, Pair], int]:
    """Output positions of the indicator gadget: wires in order, each pair right after its first wire."""
    system = _system(n, pairs)
    gamma: Dict[Union[int, Pair], int] = {}
    position = 0
    for i in range(1, n + 1):
        position += 1
        gamma[i] = position
        if i in system.firsts:
            position += 1
            gamma[(i, i + 1)] = position
    return gamma


def delta_map(big_n: int, pairs: Iterable[Sequence[int]]) -> Tuple[int, ...]:
    """Input wires kept by the NOT-cc gadget: every i with {i, i+1} not a pair."""
    system = _system(big_n, pairs)
    return tuple(i for i in range(1, big_n + 1) if i not in system.firsts)


def _layered(c: int, system: PairSystem, dropping: bool) -> Link:
    """Five layers of copies of the inputs; pair detectors hang off layers two to five."""
    check_color(c)
    n = system.n
    if n < 1:
        raise GraphError("gadget needs at least one wire")
    firsts = system.firsts
    b = LinkBuilder()
    kept = [i for i in range(1, n + 1) if not (dropping and i in firsts)]
    for i in range(1, n + 1):
        b.add(("v", 1, i), (1, i, 0))
    for layer in range(2, 6):
        for i in kept:
            b.add(("v", layer, i), (layer, i, 0))
            b.connect(("v", layer - 1, i), ("v", layer, i))
    for i in sorted(firsts):
        b.add(("u", i), (2, i, 1), (1, 3))
        b.add(("w", i), (2, i, 2), (1, 4))
        b.add(("z", 3, i), (3, i, 1), (3, 4) if dropping else (1, 3, 4))
        b.connect(("v", 1, i), ("u", i))
        b.connect(("v", 1, i + 1), ("w", i))
        b.connect(("u", i), ("z", 3, i))
        b.connect(("w", i), ("z", 3, i))
        if not dropping:
            b.add(("z", 4, i), (4, i, 1))
            b.add(("z", 5, i), (5, i, 1))
            b.connect(("z", 3, i), ("z", 4, i))
            b.connect(("z", 4, i), ("z", 5, i))

    inputs = [("v", 1, i) for i in range(1, n + 1)]
    outputs = []
    for i in kept:
        outputs.append(("v", 5, i))
        if not dropping and i in firsts:
            outputs.append(("z", 5, i))
    return certify(b.build(inputs, outputs, SWAP_12 if c == 2 else None))


def indicator_gadget(c: int, n: int, pairs: Iterable[Sequence[int]]) -> Link:
    """Copies n wires and adds, per pair, a wire forced to c when both pair wires are c."""
    link = _layered(c, _system(n, pairs), dropping=False)
    LOG.debug("indicator gadget c=%d n=%d: %d vertices", c, n, link.n)
    return link


def notcc_gadget(c: int, big_n: int, pairs: Iterable[Sequence[int]]) -> Link:
    """Forbids both wires of a pair colored c and drops the first wire of every pair."""
    link = _layered(c, _system(big_n, pairs), dropping=True)
    LOG.debug("NOT-cc gadget c=%d N=%d: %d vertices", c, big_n, link.n)
    return link
