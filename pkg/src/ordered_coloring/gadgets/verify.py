"""Exhaustive semantics check of a link against its intended behavior."""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ordered_coloring.errors import GraphError
from ordered_coloring.gadgets.indicator import PairSystem, check_color, delta_map, gamma_map
from ordered_coloring.gadgets.links import Link
from ordered_coloring.gadgets.nae import TripleSystem
from ordered_coloring.gadgets.permutation import check_permutation
from ordered_coloring.solvers.oracle import feasible_with_pins

LOG = logging.getLogger(__name__)

Assignment = Tuple[int, ...]
# None means the input must be infeasible; otherwise the exact set of reachable outputs.
Expectation = Callable[[Assignment], Optional[FrozenSet[Assignment]]]

MAX_ENUMERABLE = 12


@dataclass(frozen=True)
class PinningResult:
    """Outcome for one input assignment."""

    inputs: Assignment
    expected_feasible: bool
    feasible: Optional[bool]
    expected_outputs: FrozenSet[Assignment]
    outputs: FrozenSet[Assignment]
    status: str

    def to_dict(self) -> dict:
        """Flat record for tabular reports."""
        return {
            "inputs": "".join(map(str, self.inputs)),
            "expected_feasible": self.expected_feasible,
            "feasible": self.feasible,
            "expected_outputs": " ".join(sorted("".join(map(str, o)) for o in self.expected_outputs)),
            "outputs": " ".join(sorted("".join(map(str, o)) for o in self.outputs)),
            "status": self.status,
        }


@dataclass
class LinkReport:
    """All pinning results for one link."""

    name: str
    n: int
    in_arity: int
    out_arity: int
    results: List[PinningResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every pinning matched."""
        return all(r.status == "ok" for r in self.results)

    @property
    def mismatches(self) -> List[PinningResult]:
        """Pinnings whose behavior differs from the expectation."""
        return [r for r in self.results if r.status == "mismatch"]

    @property
    def timed_out(self) -> List[PinningResult]:
        """Pinnings abandoned at the time budget."""
        return [r for r in self.results if r.status == "timed_out"]

    def to_dict(self) -> dict:
        """Serializable summary with per-pinning rows."""
        return {
            "name": self.name,
            "n": self.n,
            "in_arity": self.in_arity,
            "out_arity": self.out_arity,
            "passed": self.passed,
            "mismatches": len(self.mismatches),
            "timed_out": len(self.timed_out),
            "pinnings": [r.to_dict() for r in self.results],
        }


def _reachable_outputs(link: Link, pins: Dict[int, int], timeout: Optional[float]) -> FrozenSet[Assignment]:
    """Output tuples of some coloring, found by extending output prefixes that stay feasible."""
    inst = link.to_instance()
    found = set()
    outputs = list(link.outputs)

    def extend(depth: int, prefix: Tuple[int, ...]) -> None:
        if depth == len(outputs):
            found.add(prefix)
            return
        for color in (1, 2):
            trial = dict(pins)
            trial.update(zip(outputs[: depth + 1], prefix + (color,)))
            if feasible_with_pins(inst, trial, timeout):
                extend(depth + 1, prefix + (color,))

    extend(0, ())
    return frozenset(found)


def _check_pinning(
    link: Link, inputs: Assignment, expectation: Expectation, timeout: Optional[float]
) -> PinningResult:
    expected = expectation(inputs)
    expected_outputs = expected if expected is not None else frozenset()
    pins = dict(zip(link.inputs, inputs))
    try:
        feasible = feasible_with_pins(link.to_instance(), pins, timeout)
        outputs = _reachable_outputs(link, pins, timeout) if feasible else frozenset()
    except TimeoutError:
        LOG.warning("pinning %s timed out", inputs)
        return PinningResult(inputs, expected is not None, None, expected_outputs, frozenset(), "timed_out")
    ok = feasible == (expected is not None) and outputs == expected_outputs
    return PinningResult(
        inputs, expected is not None, feasible, expected_outputs, outputs, "ok" if ok else "mismatch"
    )


def verify_link_semantics(
    link: Link,
    expectation: Expectation,
    name: str = "link",
    timeout: Optional[float] = None,
    threads: int = 1,
) -> LinkReport:
    """Check every input assignment in {1,2}^in_arity; mismatches are reported, not raised."""
    if link.in_arity > MAX_ENUMERABLE:
        raise GraphError(f"{link.in_arity} inputs are too many to enumerate")
    assignments = list(itertools.product((1, 2), repeat=link.in_arity))
    report = LinkReport(name, link.n, link.in_arity, link.out_arity)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            report.results = list(
                pool.map(lambda a: _check_pinning(link, a, expectation, timeout), assignments)
            )
    else:
        report.results = [_check_pinning(link, a, expectation, timeout) for a in assignments]
    LOG.info(
        "%s: %d pinnings, %d mismatches, %d timed out",
        name, len(report.results), len(report.mismatches), len(report.timed_out),
    )
    return report


def identity_expectation() -> Expectation:
    """Every input feasible and copied unchanged."""
    return lambda inputs: frozenset([tuple(inputs)])


def permutation_expectation(sigma: Sequence[int]) -> Expectation:
    """Input wire i lands on output wire sigma(i)."""
    sigma = check_permutation(sigma)

    def expect(inputs: Assignment) -> FrozenSet[Assignment]:
        out = [0] * len(sigma)
        for i, image in enumerate(sigma):
            out[image - 1] = inputs[i]
        return frozenset([tuple(out)])

    return expect


def indicator_expectation(c: int, n: int, pairs: Sequence[Sequence[int]]) -> Expectation:
    """Wires copied through gamma; a pair's bit is forced to c exactly when both its wires are c."""
    check_color(c)
    system = PairSystem(n, tuple(tuple(p) for p in pairs))
    gamma = gamma_map(n, system.pairs)

    def expect(inputs: Assignment) -> FrozenSet[Assignment]:
        choices: List[Tuple[int, ...]] = [()] * (n + len(system.pairs))
        for i in range(1, n + 1):
            choices[gamma[i] - 1] = (inputs[i - 1],)
        for pair in system.pairs:
            both = inputs[pair[0] - 1] == c and inputs[pair[1] - 1] == c
            choices[gamma[pair] - 1] = (c,) if both else (1, 2)
        return frozenset(itertools.product(*choices))

    return expect


def notcc_expectation(c: int, big_n: int, pairs: Sequence[Sequence[int]]) -> Expectation:
    """Infeasible when some pair is colored c, c; otherwise the kept wires are copied."""
    check_color(c)
    system = PairSystem(big_n, tuple(tuple(p) for p in pairs))
    kept = delta_map(big_n, system.pairs)

    def expect(inputs: Assignment) -> Optional[FrozenSet[Assignment]]:
        if any(inputs[a - 1] == c and inputs[b - 1] == c for a, b in system.pairs):
            return None
        return frozenset([tuple(inputs[i - 1] for i in kept)])

    return expect


def notccc_expectation(c: int, n: int, triples: Sequence[Sequence[int]]) -> Expectation:
    """Infeasible when some triple is colored c, c, c; otherwise identity."""
    check_color(c)
    system = TripleSystem(n, tuple(tuple(t) for t in triples))

    def expect(inputs: Assignment) -> Optional[FrozenSet[Assignment]]:
        if any(all(inputs[v - 1] == c for v in t) for t in system.triples):
            return None
        return frozenset([tuple(inputs)])

    return expect


def nae_expectation(n: int, triples: Sequence[Sequence[int]]) -> Expectation:
    """Infeasible when some triple is monochromatic; otherwise identity."""
    system = TripleSystem(n, tuple(tuple(t) for t in triples))

    def expect(inputs: Assignment) -> Optional[FrozenSet[Assignment]]:
        if any(len({inputs[v - 1] for v in t}) == 1 for t in system.triples):
            return None
        return frozenset([tuple(inputs)])

    return expect
