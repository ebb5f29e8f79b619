"""Configuration module."""

from ordered_coloring.config.solver_config import SolverConfig

__all__ = ["SolverConfig"]
