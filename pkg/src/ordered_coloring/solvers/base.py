"""Base class for list coloring solvers."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar, Optional

from ordered_coloring.core.instance import Coloring, Instance


@dataclass
class ListColoringSolver(ABC):
    """Abstract base class for list coloring routes."""

    route: ClassVar[str] = ""

    @abstractmethod
    def solve(self, inst: Instance) -> Optional[Coloring]:
        """Return a proper list coloring or None."""

    def check(self, inst: Instance) -> None:
        """Raise PreconditionError if the route does not apply."""

    def accepts(self, inst: Instance) -> bool:
        """True if the route's preconditions hold for inst."""
        try:
            self.check(inst)
        except ValueError:
            return False
        return True

    def decide(self, inst: Instance) -> bool:
        """Decision version of solve."""
        return self.solve(inst) is not None
