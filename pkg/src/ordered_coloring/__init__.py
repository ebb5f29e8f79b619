"""List coloring on ordered graphs: pattern detection, solvers and hardness gadgets."""

from ordered_coloring.errors import (
    FormatError,
    GraphError,
    InvariantViolation,
    OrderedColoringError,
    PreconditionError,
)
from ordered_coloring.core import (
    Coloring,
    Instance,
    OrderedGraph,
    Pattern,
    build_graph,
    find_induced,
    is_free,
    is_proper,
    kernelize,
    lift,
    make_instance,
    pattern_by_name,
)
from ordered_coloring.solvers import (
    ChordalSolver,
    CliqueMatchingSolver,
    EdgelessSolver,
    Ljj4Solver,
    ListColoringSolver,
    OracleSolver,
    SingleEdgeSolver,
    TwoListSolver,
    solve_exact,
)
from ordered_coloring.gadgets import build_jj1_instance, reduce_nae3sat, verify_link_semantics
from ordered_coloring.config.solver_config import SolverConfig
from ordered_coloring.engine.solver_engine import SolverEngine
from ordered_coloring.report.report_generator import ReportGenerator

__all__ = [
    "OrderedColoringError",
    "GraphError",
    "FormatError",
    "PreconditionError",
    "InvariantViolation",
    "OrderedGraph",
    "Instance",
    "Coloring",
    "Pattern",
    "build_graph",
    "make_instance",
    "is_proper",
    "pattern_by_name",
    "find_induced",
    "is_free",
    "kernelize",
    "lift",
    "ListColoringSolver",
    "OracleSolver",
    "EdgelessSolver",
    "TwoListSolver",
    "ChordalSolver",
    "CliqueMatchingSolver",
    "SingleEdgeSolver",
    "Ljj4Solver",
    "solve_exact",
    "build_jj1_instance",
    "reduce_nae3sat",
    "verify_link_semantics",
    "SolverConfig",
    "SolverEngine",
    "ReportGenerator",
]
