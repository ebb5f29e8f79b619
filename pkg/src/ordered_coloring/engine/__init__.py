"""Engine module."""

from ordered_coloring.engine.solver_engine import GADGET_KINDS, SolveResult, SolverEngine

__all__ = ["SolverEngine", "SolveResult", "GADGET_KINDS"]
