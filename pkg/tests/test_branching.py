"""Tests for branch evaluation helpers."""

import unittest

from ordered_coloring.errors import InvariantViolation
from ordered_coloring.utils.branching import BranchCounter, first_success


def _even_half(x):
    return x // 2 if x % 2 == 0 and x > 0 else None


class TestFirstSuccess(unittest.TestCase):
    """Test cases for first_success."""

    def test_sequential_returns_earliest(self):
        """The earliest successful item wins."""
        self.assertEqual(first_success([1, 3, 4, 6], _even_half), 2)

    def test_threaded_matches_sequential(self):
        """Thread count does not change the result."""
        items = [1, 3, 5, 7, 10, 12, 9, 8]
        for threads in (2, 3, 4, 8):
            self.assertEqual(first_success(items, _even_half, threads=threads), 5)

    def test_no_success(self):
        """All-None branches give None."""
        self.assertIsNone(first_success([1, 3, 5], _even_half))
        self.assertIsNone(first_success([1, 3, 5], _even_half, threads=2))
        self.assertIsNone(first_success([], _even_half, threads=2))

    def test_sequential_stops_early(self):
        """Items after the first success are not evaluated."""
        seen = []

        def fn(x):
            seen.append(x)
            return x if x == 2 else None

        first_success(iter([1, 2, 3, 4]), fn)
        self.assertEqual(seen, [1, 2])


class TestBranchCounter(unittest.TestCase):
    """Test cases for BranchCounter."""

    def test_counts_within_bound(self):
        """Ticks up to the bound are fine."""
        counter = BranchCounter("phase", bound=3)
        for _ in range(3):
            counter.tick()
        self.assertEqual(counter.count, 3)

    def test_exceeding_bound_raises(self):
        """One tick past the bound is an invariant violation."""
        counter = BranchCounter("phase", bound=1)
        counter.tick()
        with self.assertRaises(InvariantViolation):
            counter.tick()


if __name__ == "__main__":
    unittest.main()
