"""List coloring routes: one solver class per method."""

from ordered_coloring.solvers.base import ListColoringSolver
from ordered_coloring.solvers.oracle import (
    OracleSolver,
    count_colorings,
    feasible_with_pins,
    nae_brute,
    sat_brute,
    solve_exact,
)
from ordered_coloring.solvers.edgeless import EdgelessSolver, solve_edgeless
from ordered_coloring.solvers.two_list import TwoListSolver, solve_two_lists
from ordered_coloring.solvers.chordal import ChordalSolver, solve_fork_free
from ordered_coloring.solvers.clique_matching import CliqueMatchingSolver, solve_clique_unbounded
from ordered_coloring.solvers.single_edge import (
    SingleEdgeSolver,
    dp_fixed_ends,
    solve_one_edge_pattern_free,
    solve_single_edge_free,
)
from ordered_coloring.solvers.ljj4 import (
    Ljj4Solver,
    classify_neighbors,
    ramsey_upper,
    solve4_padded_fork_free,
)

__all__ = [
    "ListColoringSolver",
    "OracleSolver",
    "solve_exact",
    "count_colorings",
    "feasible_with_pins",
    "sat_brute",
    "nae_brute",
    "EdgelessSolver",
    "solve_edgeless",
    "TwoListSolver",
    "solve_two_lists",
    "ChordalSolver",
    "solve_fork_free",
    "CliqueMatchingSolver",
    "solve_clique_unbounded",
    "SingleEdgeSolver",
    "dp_fixed_ends",
    "solve_single_edge_free",
    "solve_one_edge_pattern_free",
    "Ljj4Solver",
    "classify_neighbors",
    "ramsey_upper",
    "solve4_padded_fork_free",
]
