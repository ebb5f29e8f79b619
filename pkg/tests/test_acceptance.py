"""Randomized agreement with the exact oracle across all routes.

Small samples run by default; OLC_FULL_SUITE=1 switches to the full sample
sizes and larger instances.
"""

import itertools
import os
import unittest

from ordered_coloring.core.formula import NaeFormula
from ordered_coloring.core.instance import is_proper
from ordered_coloring.core.kernel import kernelize, lift
from ordered_coloring.core.patterns import fork, fork_tail, is_free, padded_edge, padded_fork
from ordered_coloring.data.generators import make_rng, random_cnf3, random_instance
from ordered_coloring.gadgets import build_jj1_instance, decode_assignment, reduce_nae3sat
from ordered_coloring.solvers import (
    solve4_padded_fork_free,
    solve_clique_unbounded,
    solve_exact,
    solve_fork_free,
    solve_single_edge_free,
    solve_two_lists,
)
from ordered_coloring.solvers.oracle import feasible_with_pins, nae_brute, sat_brute

FULL_SUITE = bool(os.environ.get("OLC_FULL_SUITE"))


def sample(small, full):
    """Sample count for the current suite size."""
    return full if FULL_SUITE else small


class TestRouteAgreement(unittest.TestCase):
    """Test each route against the oracle on random instances."""

    def setUp(self):
        """Set up test fixtures."""
        self.rng = make_rng(20240601)

    def draw_n(self, low, high):
        """Random vertex count in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def assert_same_verdict(self, inst, col):
        """The route and the oracle agree; returned colorings are proper."""
        self.assertEqual(col is None, solve_exact(inst) is None)
        if col is not None:
            self.assertTrue(is_proper(inst, col))

    def test_kernel_equisatisfiable(self):
        """Test kernelization keeps the verdict and lifts proper colorings."""
        for _ in range(sample(50, 1000)):
            inst = random_instance(self.draw_n(1, 8), 4, 0.4, seed=self.rng)
            red = kernelize(inst)
            expected = solve_exact(inst) is not None
            if red.is_no:
                self.assertFalse(expected)
                continue
            sub = solve_exact(red.instance)
            self.assertEqual(sub is not None, expected)
            if sub is not None:
                self.assertTrue(is_proper(inst, lift(red, sub)))

    def test_two_lists(self):
        """Test the 2-SAT route."""
        for _ in range(sample(50, 1000)):
            inst = random_instance(self.draw_n(1, 12), 6, 0.35, seed=self.rng, max_size=2)
            self.assert_same_verdict(inst, solve_two_lists(inst))

    def test_fork_free(self):
        """Test the clique-tree route."""
        for _ in range(sample(30, 500)):
            inst = random_instance(self.draw_n(1, 10), 4, 0.5, seed=self.rng, patterns=[fork()])
            self.assert_same_verdict(inst, solve_fork_free(inst))

    def test_clique_matching(self):
        """Test the matching route on complete graphs."""
        for _ in range(sample(30, 300)):
            n = self.draw_n(1, 8)
            inst = random_instance(n, 10, 1.0, seed=self.rng, max_size=3)
            self.assertTrue(inst.graph.is_complete())
            self.assert_same_verdict(inst, solve_clique_unbounded(inst))

    def test_single_edge(self):
        """Test the padded-edge-free route with three and four colors."""
        for k, count in ((3, sample(15, 500)), (4, sample(5, 200))):
            for _ in range(count):
                n = self.draw_n(1, 10 if FULL_SUITE else 7)
                inst = random_instance(n, k, 0.5, seed=self.rng, patterns=[padded_edge(1)])
                self.assert_same_verdict(inst, solve_single_edge_free(inst, k, 1))

    def test_ljj4(self):
        """Test the padded-fork-free four-color route."""
        for _ in range(sample(15, 300)):
            n = self.draw_n(1, 10 if FULL_SUITE else 7)
            inst = random_instance(
                n, 4, 0.6, seed=self.rng, patterns=[padded_fork(1)], max_clique=5
            )
            self.assert_same_verdict(inst, solve4_padded_fork_free(inst, 1))


class TestCompilers(unittest.TestCase):
    """Test the hardness compilers against brute-force satisfiability."""

    def test_jj1_random_formulas(self):
        """Test colorability matches satisfiability and decoding satisfies the formula."""
        rng = make_rng(7)
        for _ in range(sample(10, 200)):
            num_vars = int(rng.integers(3, 5))
            f = random_cnf3(num_vars, int(rng.integers(1, 5)), seed=rng)
            inst, layout = build_jj1_instance(f)
            self.assertEqual(inst.n, num_vars + 13 * len(f.clauses))
            self.assertTrue(is_free(inst.graph, fork_tail()))
            col = solve_exact(inst)
            self.assertEqual(col is not None, sat_brute(f) is not None)
            if col is not None:
                self.assertTrue(f.is_satisfied_by(decode_assignment(layout, col)))

    def test_single_clause_pinnings(self):
        """Test an input pinning of one NAE clause is feasible iff it is not monochromatic."""
        inst, decode = reduce_nae3sat(NaeFormula(3, ((1, 2, 3),)))
        for colors in itertools.product((1, 2), repeat=3):
            pins = dict(zip(decode.inputs, colors))
            self.assertEqual(feasible_with_pins(inst, pins), len(set(colors)) == 2)

    @unittest.skipUnless(FULL_SUITE, "set OLC_FULL_SUITE to run")
    def test_fano_pinnings(self):
        """Test every input pinning of the Fano plane formula is infeasible."""
        f = NaeFormula(
            7, ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))
        )
        self.assertIsNone(nae_brute(f))
        inst, decode = reduce_nae3sat(f)
        for colors in itertools.product((1, 2), repeat=7):
            self.assertFalse(feasible_with_pins(inst, dict(zip(decode.inputs, colors))))


if __name__ == "__main__":
    unittest.main()
