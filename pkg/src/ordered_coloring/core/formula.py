"""3-CNF and positive NAE-3-SAT formulas with DIMACS-style text I/O."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

from ordered_coloring.errors import FormatError, GraphError

Clause = Tuple[int, int, int]


def _check_clause(clause: Sequence[int], num_vars: int, positive: bool) -> Clause:
    lits = tuple(int(x) for x in clause)
    if len(lits) != 3:
        raise GraphError(f"clause {list(lits)} must have exactly three literals")
    if any(lit == 0 or abs(lit) > num_vars for lit in lits):
        raise GraphError(f"clause {list(lits)} refers to a variable outside 1..{num_vars}")
    if len({abs(lit) for lit in lits}) != 3:
        raise GraphError(f"clause {list(lits)} must use three distinct variables")
    if positive and any(lit < 0 for lit in lits):
        raise GraphError(f"clause {list(lits)} has a negated literal")
    return lits  # type: ignore[return-value]


@dataclass(frozen=True)
class Cnf3:
    """CNF formula whose clauses have exactly three distinct variables."""

    num_vars: int
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise GraphError("num_vars must be non-negative")
        object.__setattr__(
            self, "clauses", tuple(_check_clause(c, self.num_vars, False) for c in self.clauses)
        )

    def is_satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """Evaluate under an assignment indexed by variable - 1."""
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in self.clauses
        )

    def to_dimacs(self) -> str:
        """DIMACS CNF text."""
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class NaeFormula:
    """Positive NAE-3-SAT formula."""

    num_vars: int
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise GraphError("num_vars must be non-negative")
        object.__setattr__(
            self, "clauses", tuple(_check_clause(c, self.num_vars, True) for c in self.clauses)
        )

    def is_satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """True if every clause has a true and a false variable."""
        return all(len({assignment[v - 1] for v in clause}) == 2 for clause in self.clauses)

    def occurrences(self) -> Dict[int, int]:
        """Number of clauses each variable appears in."""
        counts = {v: 0 for v in range(1, self.num_vars + 1)}
        for clause in self.clauses:
            for v in clause:
                counts[v] += 1
        return counts

    def to_text(self) -> str:
        """Text in the 'p nae' format."""
        lines = [f"p nae {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(str(v) for v in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


def _parse(text: str, kind: str) -> Tuple[int, List[List[int]]]:
    header = None
    clauses: List[List[int]] = []
    current: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s.startswith("%"):
            break
        if not s or s.startswith("c"):
            continue
        if s.startswith("p"):
            parts = s.split()
            if len(parts) != 4 or parts[1] != kind:
                raise FormatError(f"line {lineno}: expected 'p {kind} <vars> <clauses>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header field") from None
            continue
        if header is None:
            raise FormatError(f"line {lineno}: clause before problem line")
        for token in s.split():
            try:
                lit = int(token)
            except ValueError:
                raise FormatError(f"line {lineno}: bad literal {token!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise FormatError("missing problem line")
    if current:
        clauses.append(current)
    if len(clauses) != header[1]:
        raise FormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return header[0], clauses


def parse_dimacs(text: str) -> Cnf3:
    """Parse DIMACS CNF text into a 3-CNF formula."""
    num_vars, clauses = _parse(text, "cnf")
    try:
        return Cnf3(num_vars, tuple(tuple(c) for c in clauses))
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def parse_nae(text: str) -> NaeFormula:
    """Parse 'p nae' text into a positive NAE formula."""
    num_vars, clauses = _parse(text, "nae")
    try:
        return NaeFormula(num_vars, tuple(tuple(c) for c in clauses))
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def load_formula(path: str):
    """Read a CNF or NAE file, chosen by its problem line."""
    text = Path(path).read_text(encoding="utf-8")
    for raw in text.splitlines():
        parts = raw.split()
        if parts and parts[0] == "p":
            if len(parts) > 1 and parts[1] == "nae":
                return parse_nae(text)
            return parse_dimacs(text)
    raise FormatError(f"{path}: missing problem line")


def all_assignments(num_vars: int) -> Iterable[Tuple[bool, ...]]:
    """Assignments in binary counting order with bit 0 meaning true, variable 1 most significant."""
    for mask in range(1 << num_vars):
        yield tuple(not (mask >> (num_vars - 1 - i)) & 1 for i in range(num_vars))
