"""Exception hierarchy."""

from __future__ import annotations

from typing import Optional, Sequence, Tuple


class OrderedColoringError(Exception):
    """Base class for all package errors."""


class GraphError(OrderedColoringError, ValueError):
    """Invalid graph, instance or coloring construction."""


class FormatError(OrderedColoringError, ValueError):
    """Malformed serialized input."""


class PreconditionError(OrderedColoringError, ValueError):
    """A solver or gadget precondition does not hold."""

    def __init__(
        self,
        message: str,
        witness: Optional[Sequence[int]] = None,
        pattern: Optional[str] = None,
    ):
        super().__init__(message)
        self.witness: Optional[Tuple[int, ...]] = tuple(witness) if witness is not None else None
        self.pattern = pattern


class InvariantViolation(OrderedColoringError, RuntimeError):
    """An internal claim failed; indicates a bookkeeping bug."""
