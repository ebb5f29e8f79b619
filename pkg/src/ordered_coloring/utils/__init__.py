"""Shared helpers."""

from ordered_coloring.utils.branching import BranchCounter, first_success

__all__ = ["BranchCounter", "first_success"]
