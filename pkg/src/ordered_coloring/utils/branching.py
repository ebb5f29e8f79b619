"""Evaluation of independent branches."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Callable, Iterable, Optional, TypeVar

from ordered_coloring.errors import InvariantViolation

LOG = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def first_success(
    items: Iterable[T], fn: Callable[[T], Optional[R]], threads: int = 1
) -> Optional[R]:
    """Return the first non-None fn(item) in item order.

    With threads > 1 items are evaluated in windows of ``threads`` on a thread
    pool; the earliest successful item of the first window holding a success
    wins, so the result does not depend on the thread count.
    """
    if threads <= 1:
        for item in items:
            result = fn(item)
            if result is not None:
                return result
        return None
    iterator = iter(items)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        while True:
            window = list(islice(iterator, threads))
            if not window:
                return None
            for result in pool.map(fn, window):
                if result is not None:
                    return result


class BranchCounter:
    """Counts enumerated branches and enforces an upper bound."""

    def __init__(self, label: str, bound: Optional[int] = None):
        self.label = label
        self.bound = bound
        self.count = 0

    def tick(self) -> None:
        """Record one branch."""
        self.count += 1
        if self.bound is not None and self.count > self.bound:
            raise InvariantViolation(f"{self.label}: {self.count} branches exceed bound {self.bound}")

    def log(self) -> None:
        """Emit the final count."""
        LOG.debug("%s: %d branches", self.label, self.count)
