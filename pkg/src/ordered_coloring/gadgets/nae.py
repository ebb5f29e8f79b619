"""NOT-ccc and NAE gadgets, and the Positive NAE-3-SAT compiler built on them."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ordered_coloring.core.formula import NaeFormula
from ordered_coloring.core.graph import build_graph
from ordered_coloring.core.instance import Coloring, Instance, is_proper
from ordered_coloring.errors import FormatError, GraphError, InvariantViolation, PreconditionError
from ordered_coloring.gadgets.indicator import check_color, delta_map, gamma_map, indicator_gadget, notcc_gadget
from ordered_coloring.gadgets.links import Link, certify, chain_all, identity_link
from ordered_coloring.gadgets.permutation import Permutation, inverse, permutation_gadget

LOG = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

MAX_OCCURRENCES = 4
MAX_CLASSES = 10
DECODE_FORMAT = "olc-nae-decode-v1"


@dataclass(frozen=True)
class TripleSystem:
    """Pairwise disjoint 3-subsets of 1..n, each stored increasing."""

    n: int
    triples: Tuple[Triple, ...] = ()

    def __post_init__(self) -> None:
        triples = tuple(sorted(tuple(sorted(int(x) for x in t)) for t in self.triples))
        used = set()
        for triple in triples:
            if len(set(triple)) != 3 or len(triple) != 3:
                raise GraphError(f"{list(triple)} is not a set of three wires")
            if triple[0] < 1 or triple[2] > self.n:
                raise GraphError(f"triple {list(triple)} outside 1..{self.n}")
            if used & set(triple):
                raise GraphError(f"triple {list(triple)} overlaps another triple")
            used.update(triple)
        object.__setattr__(self, "triples", triples)


@dataclass(frozen=True)
class NotcccPlan:
    """Wire shuffles feeding a NOT-ccc gadget's inner indicator and NOT-cc stages."""

    sigma1: Permutation
    indicator_pairs: Tuple[Tuple[int, int], ...]
    sigma2: Permutation
    notcc_pairs: Tuple[Tuple[int, int], ...]
    sigma3: Permutation


def _pack(size: int, fronts: Sequence[int]) -> Permutation:
    """Send fronts[t] to position t + 1; everything else keeps its relative order after them."""
    images = {src: pos for pos, src in enumerate(fronts, start=1)}
    position = len(fronts)
    for src in range(1, size + 1):
        if src not in images:
            position += 1
            images[src] = position
    return tuple(images[src] for src in range(1, size + 1))


def plan_notccc(system: TripleSystem) -> NotcccPlan:
    """Canonical shuffles: first two wires of triple t at 2t-1, 2t; then indicator bit before the third wire."""
    n, triples = system.n, system.triples
    sigma1 = _pack(n, [w for i, j, _ in triples for w in (i, j)])
    indicator_pairs = tuple((2 * t - 1, 2 * t) for t in range(1, len(triples) + 1))
    gamma = gamma_map(n, indicator_pairs)
    big_n = n + len(triples)
    fronts: List[int] = []
    for t, (_, _, k) in enumerate(triples, start=1):
        fronts.append(gamma[indicator_pairs[t - 1]])
        fronts.append(gamma[sigma1[k - 1]])
    sigma2 = _pack(big_n, fronts)
    notcc_pairs = indicator_pairs
    delta = delta_map(big_n, notcc_pairs)
    position_of = {wire: pos for pos, wire in enumerate(delta, start=1)}
    try:
        through = tuple(position_of[sigma2[gamma[sigma1[x - 1]] - 1]] for x in range(1, n + 1))
    except KeyError:
        raise InvariantViolation("a variable wire is dropped by the NOT-cc stage") from None
    return NotcccPlan(sigma1, indicator_pairs, sigma2, notcc_pairs, inverse(through))


def notccc_gadget(c: int, n: int, triples: Iterable[Sequence[int]]) -> Link:
    """Identity on n wires that forbids any triple colored c, c, c."""
    check_color(c)
    if n < 1:
        raise GraphError("NOT-ccc gadget needs at least one wire")
    system = TripleSystem(n, tuple(tuple(t) for t in triples))
    plan = plan_notccc(system)
    big_n = n + len(system.triples)
    link = chain_all(
        [
            permutation_gadget(plan.sigma1),
            indicator_gadget(c, n, plan.indicator_pairs),
            permutation_gadget(plan.sigma2),
            notcc_gadget(c, big_n, plan.notcc_pairs),
            permutation_gadget(plan.sigma3),
        ]
    )
    LOG.debug("NOT-ccc gadget c=%d n=%d triples=%d: %d vertices", c, n, len(system.triples), link.n)
    return link


def nae_gadget(n: int, triples: Iterable[Sequence[int]]) -> Link:
    """Identity on n wires that forbids monochromatic triples in either color."""
    triples = [tuple(t) for t in triples]
    return chain_all([notccc_gadget(1, n, triples), notccc_gadget(2, n, triples)])


def partition_clauses(f: NaeFormula) -> List[List[Triple]]:
    """Greedy split into classes of variable-disjoint clauses, smallest fitting class first."""
    classes: List[List[Triple]] = []
    seen: List[set] = []
    for clause in f.clauses:
        for index, variables in enumerate(seen):
            if not variables & set(clause):
                classes[index].append(clause)
                variables.update(clause)
                break
        else:
            classes.append([clause])
            seen.append(set(clause))
    return classes


@dataclass(frozen=True)
class NaeDecodeMap:
    """Vertex carrying each variable's value (True iff colored 1)."""

    inputs: Tuple[int, ...]

    def decode(self, col: Coloring) -> Tuple[bool, ...]:
        """Read the assignment off a coloring."""
        return tuple(col[v] == 1 for v in self.inputs)

    def to_dict(self) -> dict:
        """Serializable form."""
        return {"format": DECODE_FORMAT, "inputs": list(self.inputs)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "NaeDecodeMap":
        """Inverse of to_dict."""
        if data.get("format") != DECODE_FORMAT:
            raise FormatError(f"expected format {DECODE_FORMAT!r}")
        try:
            return cls(tuple(int(v) for v in data["inputs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed NAE decode map: {exc}") from None


def reduce_nae3sat(f: NaeFormula) -> Tuple[Instance, NaeDecodeMap]:
    """Compile f into a nested-pair-free list 4-coloring instance colorable iff f is NAE-satisfiable."""
    heavy: Dict[int, int] = {v: c for v, c in f.occurrences().items() if c > MAX_OCCURRENCES}
    if heavy:
        raise PreconditionError(
            f"variables {sorted(heavy)} occur in more than {MAX_OCCURRENCES} clauses; "
            "split them with equality-preserving copies before compiling"
        )
    if f.num_vars == 0:
        return Instance(build_graph(0, []), (), 4), NaeDecodeMap(())
    classes = partition_clauses(f)
    if len(classes) > MAX_CLASSES:
        raise InvariantViolation(f"greedy partition used {len(classes)} classes")
    LOG.info("compiling %d clauses in %d variable-disjoint classes", len(f.clauses), len(classes))
    if classes:
        link = chain_all([nae_gadget(f.num_vars, cls) for cls in classes], check=False)
    else:
        link = identity_link(f.num_vars)
    certify(link)
    return link.to_instance(), NaeDecodeMap(tuple(link.inputs))


def decode_nae(decode: NaeDecodeMap, inst: Instance, col: Coloring) -> Tuple[bool, ...]:
    """Assignment of a proper coloring of the compiled instance."""
    if not is_proper(inst, col):
        raise GraphError("coloring is not proper for the compiled instance")
    return decode.decode(col)
