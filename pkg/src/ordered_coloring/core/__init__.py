"""Core data model."""

from ordered_coloring.core.graph import (
    OrderedGraph,
    backward_neighbors,
    build_graph,
    complete_graph,
    cycle_graph,
    forward_neighbors,
    induced,
    reverse,
)
from ordered_coloring.core.instance import Coloring, Instance, is_proper, make_instance
from ordered_coloring.core.patterns import (
    Pattern,
    contains_clique,
    edge_span,
    find_induced,
    fork,
    fork_tail,
    is_free,
    nested_pair,
    padded_edge,
    padded_fork,
    pattern_by_name,
    require_free,
)
from ordered_coloring.core.kernel import ReducedInstance, kernelize, lift
from ordered_coloring.core.formula import Cnf3, NaeFormula, parse_dimacs, parse_nae

__all__ = [
    "OrderedGraph",
    "build_graph",
    "complete_graph",
    "cycle_graph",
    "induced",
    "forward_neighbors",
    "backward_neighbors",
    "reverse",
    "Instance",
    "Coloring",
    "is_proper",
    "make_instance",
    "Pattern",
    "edge_span",
    "padded_edge",
    "fork",
    "fork_tail",
    "padded_fork",
    "nested_pair",
    "pattern_by_name",
    "find_induced",
    "is_free",
    "require_free",
    "contains_clique",
    "ReducedInstance",
    "kernelize",
    "lift",
    "Cnf3",
    "NaeFormula",
    "parse_dimacs",
    "parse_nae",
]
