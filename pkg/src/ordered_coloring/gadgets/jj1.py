"""3-SAT to list 4-coloring on fork-tail-free ordered graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from ordered_coloring.core.formula import Cnf3
from ordered_coloring.core.graph import build_graph
from ordered_coloring.core.instance import Coloring, Instance, is_proper
from ordered_coloring.core.patterns import find_induced, fork_tail
from ordered_coloring.errors import FormatError, GraphError, InvariantViolation

LOG = logging.getLogger(__name__)

LAYOUT_FORMAT = "olc-jj1-layout-v1"
BLOCKS = ("Z", "Y", "C", "X")

Occurrence = Tuple[int, int]


@dataclass(frozen=True)
class Jj1Layout:
    """Where every piece of the construction sits in the vertex order."""

    formula: Cnf3
    x: Tuple[int, ...]
    occurrences: Dict[Occurrence, Tuple[int, int, int]]
    clauses: Tuple[Tuple[int, int, int, int], ...]
    blocks: Dict[str, Tuple[int, int]]

    @property
    def n(self) -> int:
        """Vertex count of the built instance."""
        return self.blocks["X"][1]

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "format": LAYOUT_FORMAT,
            "num_vars": self.formula.num_vars,
            "clauses": [list(c) for c in self.formula.clauses],
            "x": list(self.x),
            "occurrences": [
                {"variable": i, "clause": j, "y": y, "z1": z1, "z2": z2}
                for (i, j), (y, z1, z2) in sorted(self.occurrences.items())
            ],
            "clause_vertices": [list(c) for c in self.clauses],
            "blocks": {name: list(self.blocks[name]) for name in BLOCKS},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Jj1Layout":
        """Inverse of to_dict."""
        if data.get("format") != LAYOUT_FORMAT:
            raise FormatError(f"expected format {LAYOUT_FORMAT!r}")
        try:
            formula = Cnf3(int(data["num_vars"]), tuple(tuple(c) for c in data["clauses"]))
            return cls(
                formula=formula,
                x=tuple(int(v) for v in data["x"]),
                occurrences={
                    (int(o["variable"]), int(o["clause"])): (int(o["y"]), int(o["z1"]), int(o["z2"]))
                    for o in data["occurrences"]
                },
                clauses=tuple(tuple(int(v) for v in c) for c in data["clause_vertices"]),
                blocks={name: tuple(data["blocks"][name]) for name in BLOCKS},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed jj1 layout: {exc}") from None


def _z_lists(positive: bool) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    return ((1, 4), (2, 3)) if positive else ((1, 3), (2, 4))


def build_jj1_instance(f: Cnf3) -> Tuple[Instance, Jj1Layout]:
    """Colorable iff f is satisfiable; the graph has no induced fork-tail."""
    n, m = f.num_vars, len(f.clauses)
    signs: Dict[Occurrence, bool] = {}
    for j, clause in enumerate(f.clauses, start=1):
        for lit in clause:
            signs[(abs(lit), j)] = lit > 0
    occ = sorted(signs)

    lists: List[Tuple[int, ...]] = []
    z_index: Dict[Occurrence, Tuple[int, int]] = {}
    for key in occ:
        z_index[key] = (len(lists), len(lists) + 1)
        lists.extend(_z_lists(signs[key]))
    y_index: Dict[Occurrence, int] = {}
    for key in occ:
        y_index[key] = len(lists)
        lists.append((3, 4))
    clause_vertices = []
    for _ in range(m):
        base = len(lists)
        clause_vertices.append((base, base + 1, base + 2, base + 3))
        lists.extend([(1, 4), (2, 4), (3, 4), (1, 2, 3)])
    x_index = tuple(range(len(lists), len(lists) + n))
    lists.extend([(1, 2)] * n)

    edges = []
    for key in occ:
        i, _ = key
        z1, z2 = z_index[key]
        y = y_index[key]
        edges.extend([(z1, x_index[i - 1]), (z2, x_index[i - 1]), (z1, y), (z2, y)])
    edges.extend((y, x) for y in y_index.values() for x in x_index)
    for j, clause in enumerate(f.clauses, start=1):
        a, b, c, d = clause_vertices[j - 1]
        edges.extend([(a, d), (b, d), (c, d)])
        for guard, lit in zip((a, b, c), clause):
            edges.append((guard, y_index[(abs(lit), j)]))

    total = len(lists)
    inst = Instance(build_graph(total, edges), tuple(frozenset(lst) for lst in lists), 4)
    z_end = 2 * len(occ)
    y_end = z_end + len(occ)
    c_end = y_end + 4 * m
    layout = Jj1Layout(
        formula=f,
        x=x_index,
        occurrences={key: (y_index[key],) + z_index[key] for key in occ},
        clauses=tuple(clause_vertices),
        blocks={"Z": (0, z_end), "Y": (z_end, y_end), "C": (y_end, c_end), "X": (c_end, total)},
    )
    witness = find_induced(inst.graph, fork_tail())
    if witness is not None:
        raise InvariantViolation(f"jj1 construction contains fork-tail at {list(witness)}")
    LOG.info("jj1 instance: %d variables, %d clauses, %d vertices", n, m, total)
    return inst, layout


def decode_assignment(layout: Jj1Layout, col: Coloring) -> Tuple[bool, ...]:
    """Variable i is true iff its x-vertex has color 1."""
    inst, _ = build_jj1_instance(layout.formula)
    if not is_proper(inst, col):
        raise GraphError("coloring is not proper for the jj1 instance")
    return tuple(col[v] == 1 for v in layout.x)
